"""Lattice-point counts of dilated polytopes and their Ehrhart polynomials."""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _kernels
from .errors import InputError, InternalConsistencyError, ResourceGuardError
from .numeric import RationalPolynomial, interpolate

ENV_MAX_POINTS = "DEDEKIND_EHRHART_MAX_POINTS"
DEFAULT_MAX_POINTS = 10**8

_INT64_SAFE = 1 << 62


def max_points() -> int:
    """Enumeration ceiling, overridable through the environment."""
    raw = os.environ.get(ENV_MAX_POINTS)
    if raw is None:
        return DEFAULT_MAX_POINTS
    try:
        return int(float(raw))
    except ValueError:
        raise InputError(f"{ENV_MAX_POINTS} must be a number, got {raw!r}") from None


@dataclass(frozen=True)
class AxisSimplex:
    """Simplex spanned by the origin and ``a_i * e_i``; intercepts pairwise coprime."""

    intercepts: tuple[int, ...]

    def __init__(self, intercepts: Sequence[int]):
        ints = tuple(int(a) for a in intercepts)
        if not ints:
            raise InputError("a simplex needs at least one intercept")
        if any(a < 1 for a in ints):
            raise InputError(f"intercepts must be positive, got {ints}")
        for i in range(len(ints)):
            for j in range(i + 1, len(ints)):
                g = math.gcd(ints[i], ints[j])
                if g != 1:
                    raise InputError(
                        f"gcd({ints[i]},{ints[j]})={g}; intercepts must be pairwise coprime"
                    )
        object.__setattr__(self, "intercepts", ints)

    @property
    def n(self) -> int:
        return len(self.intercepts)

    @property
    def p(self) -> int:
        return math.prod(self.intercepts)

    @property
    def volume(self) -> Fraction:
        return Fraction(self.p, math.factorial(self.n))


@dataclass(frozen=True)
class EhrhartPolynomial:
    poly: RationalPolynomial
    n: int

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(self.poly.coefficient(j) for j in range(self.n + 1))

    def coefficient(self, j: int) -> Fraction:
        return self.poly.coefficient(j)

    def __call__(self, t: int) -> Fraction:
        return self.poly(t)

    def __str__(self) -> str:
        return str(self.poly)


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class LatticePolygon:
    """Strictly convex lattice polygon with vertices listed counterclockwise."""

    vertices: tuple[tuple[int, int], ...]

    def __init__(self, vertices: Sequence[Sequence[int]]):
        verts = tuple((int(x), int(y)) for x, y in vertices)
        if len(verts) < 3:
            raise InputError("a polygon needs at least 3 vertices")
        m = len(verts)
        for i in range(m):
            turn = _cross(verts[i], verts[(i + 1) % m], verts[(i + 2) % m])
            if turn == 0:
                raise InputError(f"vertices {i}..{(i + 2) % m} are collinear")
            if turn < 0:
                raise InputError("polygon must be strictly convex and counterclockwise")
        object.__setattr__(self, "vertices", verts)
        if self.twice_area <= 0:
            raise InputError("polygon has zero or negative area")

    @property
    def twice_area(self) -> int:
        v = self.vertices
        m = len(v)
        return sum(v[i][0] * v[(i + 1) % m][1] - v[(i + 1) % m][0] * v[i][1] for i in range(m))

    @property
    def area(self) -> Fraction:
        return Fraction(self.twice_area, 2)

    @property
    def boundary_points(self) -> int:
        v = self.vertices
        m = len(v)
        return sum(
            math.gcd(abs(v[(i + 1) % m][0] - v[i][0]), abs(v[(i + 1) % m][1] - v[i][1]))
            for i in range(m)
        )


def _guard(volume: Fraction, what: str) -> None:
    limit = max_points()
    if volume > limit:
        raise ResourceGuardError(
            f"instance too large: {what} encloses ~{float(volume):.3g} points (limit {limit})"
        )


def _count_simplex_python(weights: list[int], cap: int) -> int:
    if len(weights) == 1:
        return cap // weights[0] + 1 if cap >= 0 else 0
    w, rest = weights[0], weights[1:]
    return sum(_count_simplex_python(rest, cap - w * x) for x in range(cap // w + 1))


def count_lattice_points(simplex: AxisSimplex, t: int) -> int:
    """L(P, t): integer points with x_i >= 0 and sum (p / a_i) x_i <= p t."""
    if t < 0:
        raise InputError(f"dilation factor must be nonnegative, got {t}")
    _guard(simplex.volume * t**simplex.n, f"{t}*simplex{simplex.intercepts}")
    p = simplex.p
    weights = [p // a for a in simplex.intercepts]
    cap = p * t
    if cap >= _INT64_SAFE or max(weights) >= _INT64_SAFE:
        return _count_simplex_python(weights, cap)
    return _kernels.active().count_simplex(weights, cap)


def count_polygon_points(polygon: LatticePolygon, t: int) -> int:
    """Lattice points in the closed dilate t * polygon (the origin alone when t = 0)."""
    if t < 0:
        raise InputError(f"dilation factor must be nonnegative, got {t}")
    if t == 0:
        return 1
    xs = [t * x for x, _ in polygon.vertices]
    ys = [t * y for _, y in polygon.vertices]
    box = (max(xs) - min(xs) + 1) * (max(ys) - min(ys) + 1)
    _guard(Fraction(box), f"bounding box of {t}*polygon")
    return _kernels.active().count_polygon(xs, ys)


def ehrhart_interpolate(simplex: AxisSimplex) -> EhrhartPolynomial:
    """Interpolate brute-force counts at t = 0..n into L(P, t)."""
    n = simplex.n
    counts = [(t, count_lattice_points(simplex, t)) for t in range(n + 1)]
    poly = interpolate(counts)
    if poly.coefficient(0) != 1:
        raise InternalConsistencyError(f"constant term {poly.coefficient(0)} != 1")
    if poly.coefficient(n) != simplex.volume or poly.degree != n:
        raise InternalConsistencyError(
            f"leading term {poly.coefficient(n)} != volume {simplex.volume}"
        )
    return EhrhartPolynomial(poly=poly, n=n)


def pick_polynomial(polygon: LatticePolygon) -> EhrhartPolynomial:
    """A t^2 + (B/2) t + 1 from the shoelace area and edge gcds."""
    return EhrhartPolynomial(
        poly=RationalPolynomial([1, Fraction(polygon.boundary_points, 2), polygon.area]), n=2
    )
