import itertools
import math
from fractions import Fraction

import pytest

from dedekind_ehrhart import lattice
from dedekind_ehrhart.errors import InputError, ResourceGuardError
from dedekind_ehrhart.lattice import (
    AxisSimplex,
    LatticePolygon,
    count_lattice_points,
    count_polygon_points,
    ehrhart_interpolate,
    pick_polynomial,
)

from .conftest import random_convex_polygons


def enumerate_simplex(intercepts, t):
    """Naive product-space scan with rational comparisons."""
    ranges = [range(a * t + 1) for a in intercepts]
    return sum(
        1 for x in itertools.product(*ranges) if sum(Fraction(xi, a) for xi, a in zip(x, intercepts)) <= t
    )


def enumerate_polygon(vertices, t):
    """Winding-free test: a point is inside iff it is left of or on every CCW edge."""
    vs = [(t * x, t * y) for x, y in vertices]
    xs, ys = [v[0] for v in vs], [v[1] for v in vs]
    n = 0
    for px in range(min(xs), max(xs) + 1):
        for py in range(min(ys), max(ys) + 1):
            if all(
                (vs[(i + 1) % len(vs)][0] - vs[i][0]) * (py - vs[i][1])
                >= (vs[(i + 1) % len(vs)][1] - vs[i][1]) * (px - vs[i][0])
                for i in range(len(vs))
            ):
                n += 1
    return n


TRIANGLE = [(0, 0), (2, 0), (0, 3)]
SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
UNIT = [(0, 0), (1, 0), (0, 1)]


@pytest.mark.parametrize(
    "intercepts,t,count",
    [((2, 3), 0, 1), ((2, 3), 1, 7), ((2, 3), 2, 19), ((1, 2, 3), 1, 8)],
)
def test_count_examples(intercepts, t, count, backend):
    assert enumerate_simplex(intercepts, t) == count
    assert count_lattice_points(AxisSimplex(intercepts), t) == count


@pytest.mark.parametrize(
    "intercepts", [(1,), (5,), (1, 1), (3, 4), (5, 7), (1, 1, 1), (2, 3, 5), (1, 3, 4), (2, 1, 3, 1)]
)
@pytest.mark.parametrize("t", range(0, 4))
def test_count_matches_enumeration(intercepts, t, backend):
    assert count_lattice_points(AxisSimplex(intercepts), t) == enumerate_simplex(intercepts, t)


def test_count_is_monotone(backend):
    s = AxisSimplex((3, 5, 7))
    counts = [count_lattice_points(s, t) for t in range(8)]
    assert counts == sorted(counts)
    assert len(set(counts)) == len(counts)


def test_simplex_validation():
    with pytest.raises(InputError, match=r"gcd\(4,6\)=2"):
        AxisSimplex((4, 6))
    with pytest.raises(InputError):
        AxisSimplex((3, 0))
    with pytest.raises(InputError):
        AxisSimplex(())
    s = AxisSimplex((2, 3, 5))
    assert (s.n, s.p, s.volume) == (3, 30, 5)


def test_resource_guard(monkeypatch):
    s = AxisSimplex((1000, 1001))
    with pytest.raises(ResourceGuardError, match="too large"):
        count_lattice_points(s, 100)
    monkeypatch.setenv(lattice.ENV_MAX_POINTS, "10")
    with pytest.raises(ResourceGuardError):
        count_lattice_points(AxisSimplex((2, 3)), 3)
    assert count_lattice_points(AxisSimplex((2, 3)), 1) == 7


def test_python_fallback_for_huge_weights():
    # intercepts whose product overflows int64 still count exactly at t = 1 in 1-D
    big = 2**70 + 1
    s = AxisSimplex((big,))
    assert count_lattice_points(s, 0) == 1
    assert lattice._count_simplex_python([3, 2], 6) == 7


@pytest.mark.parametrize(
    "intercepts,coeffs",
    [((2, 3), [1, 3, 3]), ((1, 1), [1, Fraction(3, 2), Fraction(1, 2)]), ((1, 2, 3), [1, 3, 3, 1])],
)
def test_ehrhart_examples(intercepts, coeffs):
    assert list(ehrhart_interpolate(AxisSimplex(intercepts)).coefficients) == coeffs


def test_unit_triangle_is_binomial():
    poly = ehrhart_interpolate(AxisSimplex((1, 1)))
    for t in range(10):
        assert poly(t) == (t + 1) * (t + 2) // 2


@pytest.mark.parametrize("intercepts", [(2, 3), (5, 7), (1, 4), (3, 4, 5), (1, 2, 3, 5)])
def test_ehrhart_predicts_beyond_nodes(intercepts):
    s = AxisSimplex(intercepts)
    poly = ehrhart_interpolate(s)
    assert poly.coefficient(0) == 1
    assert poly.coefficient(s.n) == Fraction(s.p, math.factorial(s.n))
    for t in range(s.n + 1, s.n + 4):
        assert poly(t) == count_lattice_points(s, t)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 10) for b in range(1, 10) if math.gcd(a, b) == 1])
def test_two_dim_linear_coefficient(a, b):
    poly = ehrhart_interpolate(AxisSimplex((a, b)))
    assert poly.coefficient(1) == Fraction(a + b + 1, 2)
    assert pick_polynomial(LatticePolygon([(0, 0), (a, 0), (0, b)])) == poly


@pytest.mark.parametrize(
    "vertices,area,boundary,coeffs",
    [
        (TRIANGLE, 3, 6, [1, 3, 3]),
        (SQUARE, 1, 4, [1, 2, 1]),
        (UNIT, Fraction(1, 2), 3, [1, Fraction(3, 2), Fraction(1, 2)]),
    ],
)
def test_pick_examples(vertices, area, boundary, coeffs):
    poly = LatticePolygon(vertices)
    assert poly.area == area
    assert poly.boundary_points == boundary
    assert list(pick_polynomial(poly).coefficients) == coeffs


@pytest.mark.parametrize(
    "vertices,t,count", [(SQUARE, 3, 16), (TRIANGLE, 1, 7), (TRIANGLE, 0, 1), (SQUARE, 0, 1)]
)
def test_polygon_count_examples(vertices, t, count, backend):
    assert count_polygon_points(LatticePolygon(vertices), t) == count


@pytest.mark.parametrize("vertices", random_convex_polygons(25, seed=7))
def test_polygon_count_matches_enumeration(vertices, backend):
    poly = LatticePolygon(vertices)
    for t in (1, 2):
        assert count_polygon_points(poly, t) == enumerate_polygon(vertices, t)


def test_polygon_validation():
    with pytest.raises(InputError):
        LatticePolygon([(0, 0), (1, 0)])
    with pytest.raises(InputError, match="collinear"):
        LatticePolygon([(0, 0), (1, 0), (2, 0)])
    with pytest.raises(InputError, match="counterclockwise"):
        LatticePolygon(list(reversed(TRIANGLE)))
    with pytest.raises(InputError, match="collinear"):
        LatticePolygon([(0, 0), (1, 0), (2, 0), (0, 2)])
    with pytest.raises(InputError):
        count_polygon_points(LatticePolygon(SQUARE), -1)


def test_polygon_away_from_origin():
    shifted = LatticePolygon([(5, 5), (7, 5), (5, 8)])
    assert list(pick_polynomial(shifted).coefficients) == [1, 3, 3]
    for t in range(4):
        assert count_polygon_points(shifted, t) == pick_polynomial(shifted)(t)
