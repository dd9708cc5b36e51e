"""Truncated Laurent series and the coth-product route to Ehrhart coefficients.

Each factor ``1 + coth(pi (s + i r) / c)`` is expanded about s = 0: with a
simple pole when c divides r, as a Taylor series otherwise. Summing the
products of these factors over r and reading off one coefficient gives
c_m of the axis simplex. For n = 2 the constant term splits into three
closed-form rational contributions that add up to 1.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Number
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .dedekind import CoprimePair, _pair, dedekind_sawtooth
from .errors import ConfigurationError, TruncationError, WrongBranchError
from .lattice import AxisSimplex
from .numeric import COMPLEX_DTYPE


@dataclass(frozen=True)
class TruncatedLaurentSeries:
    """sum_k coeffs[k - min_order] s^k for min_order <= k <= max_order, plus O(s^(max_order+1))."""

    min_order: int
    coeffs: tuple[complex, ...]

    def __init__(self, min_order: int, coeffs: Iterable[complex]):
        coeffs = tuple(complex(c) for c in coeffs)
        if not coeffs:
            raise TruncationError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "min_order", int(min_order))
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def max_order(self) -> int:
        return self.min_order + len(self.coeffs) - 1

    def __getitem__(self, k: int) -> complex:
        """Coefficient of s^k; zero below the window, an error above it."""
        if k > self.max_order:
            raise TruncationError(f"order {k} lies beyond the truncation order {self.max_order}")
        if k < self.min_order:
            return 0j
        return self.coeffs[k - self.min_order]

    def __add__(self, other):
        if isinstance(other, Number):
            if other == 0:
                return self
            other = TruncatedLaurentSeries(0, [other] + [0] * max(self.max_order, 0))
            top = self.max_order
        else:
            top = min(self.max_order, other.max_order)
        low = min(self.min_order, other.min_order)
        if top < low:
            raise TruncationError("sum has an empty coefficient window")
        return TruncatedLaurentSeries(
            low, [self._get(k) + other._get(k) for k in range(low, top + 1)]
        )

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, Number):
            return TruncatedLaurentSeries(self.min_order, [c * other for c in self.coeffs])
        low = self.min_order + other.min_order
        top = min(self.min_order + other.max_order, other.min_order + self.max_order)
        if top < low:
            raise TruncationError("product has an empty coefficient window")
        out = [0j] * (top - low + 1)
        for i, u in enumerate(self.coeffs):
            for j, v in enumerate(other.coeffs):
                if i + j < len(out):
                    out[i + j] += u * v
        return TruncatedLaurentSeries(low, out)

    __rmul__ = __mul__

    def _get(self, k: int) -> complex:
        if self.min_order <= k <= self.max_order:
            return self.coeffs[k - self.min_order]
        return 0j

    def __call__(self, s: complex) -> complex:
        """Evaluate the retained terms at ``s`` (s != 0 when min_order < 0)."""
        return sum(c * s ** (self.min_order + i) for i, c in enumerate(self.coeffs))


def series_add(x: TruncatedLaurentSeries, y) -> TruncatedLaurentSeries:
    return x + y


def series_mul(x: TruncatedLaurentSeries, y: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    return x * y


def series_scale(x: TruncatedLaurentSeries, factor: complex) -> TruncatedLaurentSeries:
    return x * factor


@lru_cache(maxsize=None)
def _bernoulli(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n with B_1 = -1/2 (only the even ones are used)."""
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(math.comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return tuple(b)


@lru_cache(maxsize=None)
def coth_laurent_coefficients(K: int) -> tuple[Fraction, ...]:
    """Exact coefficients of x^-1, x^0, ..., x^K in coth(x) = sum 4^j B_2j x^(2j-1) / (2j)!."""
    bern = _bernoulli(K + 1)
    out = []
    for k in range(-1, K + 1):
        if k % 2 == 0:
            out.append(Fraction(0))
        else:
            j = (k + 1) // 2
            out.append(4**j * bern[2 * j] / math.factorial(2 * j))
    return tuple(out)


def coth_series_singular(c: int, K: int) -> TruncatedLaurentSeries:
    """1 + coth(pi s / c) on orders -1..K."""
    if K < -1:
        raise ConfigurationError(f"truncation order must be >= -1, got {K}")
    step = math.pi / c
    coeffs = [float(a) * step**k for k, a in zip(range(-1, K + 1), coth_laurent_coefficients(K))]
    if K >= 0:
        coeffs[1] += 1.0
    return TruncatedLaurentSeries(-1, coeffs)


def _coth_taylor(y0: complex, K: int) -> list[complex]:
    # coth' = 1 - coth^2, so (k+1) y_{k+1} = [k == 0] - sum_j y_j y_{k-j}
    y = [y0]
    for k in range(K):
        acc = (1.0 if k == 0 else 0.0) - sum(y[j] * y[k - j] for j in range(k + 1))
        y.append(acc / (k + 1))
    return y


def cot_pi_fraction(r: int, c: int) -> float:
    """cot(pi r / c) for c not dividing r, from an angle folded into (0, pi/2]."""
    rem = r % c
    if 2 * rem <= c:
        return 1.0 / math.tan(math.pi * rem / c)
    return -1.0 / math.tan(math.pi * (c - rem) / c)


def coth_series_regular(c: int, r: int, K: int) -> TruncatedLaurentSeries:
    """1 + coth(pi (s + i r) / c) on orders 0..K, for c not dividing r."""
    if r % c == 0:
        raise WrongBranchError(f"{c} divides {r}: use coth_series_singular")
    if K < 0:
        raise ConfigurationError(f"truncation order must be >= 0, got {K}")
    y0 = -1j * cot_pi_fraction(r, c)
    step = math.pi / c
    coeffs = [y * step**k for k, y in enumerate(_coth_taylor(y0, K))]
    coeffs[0] += 1.0
    return TruncatedLaurentSeries(0, coeffs)


@dataclass(frozen=True)
class FactorKind:
    kind: str
    c: int
    r: int


def classify_factor(c: int, r: int) -> FactorKind:
    return FactorKind("singular" if r % c == 0 else "regular", c, r)


def factor_series(c: int, r: int, K: int) -> TruncatedLaurentSeries:
    """Expansion of 1 + coth(pi (s + i r) / c); uses periodicity at the poles."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if r % c == 0:
        return coth_series_singular(c, K)
    return coth_series_regular(c, r, K)


def default_truncation(n: int) -> int:
    return n + 3


def _moduli(simplex: AxisSimplex) -> list[int]:
    return list(simplex.intercepts) + [simplex.p]


def product_sum(moduli: Sequence[int], rs: Iterable[int], K: int, engine: str = "kernel"):
    """Sum over ``rs`` of the product of factor series for ``moduli``.

    Returns ``(min_order, coefficients)`` for orders -q..K-q+1, q = len(moduli).
    ``engine="series"`` composes :class:`TruncatedLaurentSeries` objects
    term by term instead of calling the compiled kernel; it is the slow
    reference route.
    """
    q = len(moduli)
    if K < q - 1:
        raise ConfigurationError(f"truncation order {K} too small for {q} factors")
    rs = list(rs)
    if engine == "series":
        acc = TruncatedLaurentSeries(-q, [0] * (K + 2))
        for r in rs:
            prod = TruncatedLaurentSeries(0, [1] + [0] * (K + 1))
            for c in moduli:
                f = factor_series(c, r, K)
                # hold every factor on -1..K so the window matches the kernel
                if f.min_order == 0:
                    f = TruncatedLaurentSeries(-1, (0,) + f.coeffs)
                prod = prod * f
            acc = acc + prod
        return -q, np.array(acc.coeffs[: K + 2], dtype=COMPLEX_DTYPE)
    if engine != "kernel":
        raise ValueError(f"unknown engine {engine!r}")
    singular = np.array([coth_series_singular(c, K).coeffs for c in moduli], dtype=COMPLEX_DTYPE)
    rs_arr = np.asarray(rs, dtype=np.int64)
    if rs_arr.size == 0:
        return -q, np.zeros(K + 2, dtype=COMPLEX_DTYPE)
    return -q, _kernels.active().theorem_sum(list(moduli), singular, rs_arr, K)


def theorem_prefactor(n: int, m: int, p: int) -> float:
    """pi^(m+1) / (m! 2^(n-m) p)."""
    return math.pi ** (m + 1) / (math.factorial(m) * 2 ** (n - m) * p)


def theorem_coefficients(simplex: AxisSimplex, K: int | None = None, engine: str = "kernel") -> list[complex]:
    """All c_0..c_n of the simplex from one pass of the r-sum."""
    n = simplex.n
    K = default_truncation(n) if K is None else K
    low, coeffs = product_sum(_moduli(simplex), range(1, simplex.p + 1), K, engine)
    out = []
    for m in range(n + 1):
        idx = -(m + 1) - low
        if not 0 <= idx < len(coeffs):
            raise ConfigurationError(f"window misses the s^{-(m + 1)} coefficient")
        out.append(complex(coeffs[idx]) * theorem_prefactor(n, m, simplex.p))
    return out


def theorem_coefficient(simplex: AxisSimplex, m: int, K: int | None = None, engine: str = "kernel") -> complex:
    """c_m as the s^-(m+1) coefficient of the coth-product sum (complex; Im ~ 0)."""
    if not 0 <= m <= simplex.n:
        raise ConfigurationError(f"m must lie in 0..{simplex.n}, got {m}")
    return theorem_coefficients(simplex, K, engine)[m]


@dataclass(frozen=True)
class ConstantTermDecomposition:
    contrib_a: Fraction
    contrib_b: Fraction
    contrib_triple: Fraction
    total: Fraction


def decompose_constant_term(a, b=None) -> ConstantTermDecomposition:
    """Split c_0 = 1 of the (a, b) triangle into its three exact pieces.

    The pole of factor a alone (r = ka) gives 1/4 - 1/(4b) - s(a, b), factor
    b alone gives the mirror image, and the triple pole at r = ab gives
    (1/(ab) + a/b + b/a)/12 + (1/a + 1/b + 1)/4.
    """
    p = _pair(a, b)
    a, b = p.a, p.b
    contrib_a = Fraction(1, 4) - Fraction(1, 4 * b) - dedekind_sawtooth(a, b)
    contrib_b = Fraction(1, 4) - Fraction(1, 4 * a) - dedekind_sawtooth(b, a)
    contrib_triple = Fraction(a * a + b * b + 1, 12 * a * b) + Fraction(a + b + a * b, 4 * a * b)
    total = contrib_a + contrib_b + contrib_triple
    return ConstantTermDecomposition(contrib_a, contrib_b, contrib_triple, total)


def support(p: CoprimePair, which: str) -> list[int]:
    """The r in 1..ab carrying each closed-form contribution."""
    a, b = p.a, p.b
    if which == "a":
        return [k * a for k in range(1, b)]
    if which == "b":
        return [k * b for k in range(1, a)]
    if which == "triple":
        return [a * b]
    raise ValueError(f"which must be 'a', 'b' or 'triple', got {which!r}")


def two_singular_supports(a, b=None) -> dict[str, set[int]]:
    """r in 1..ab where exactly two of the factors (a, b, ab) have a pole.

    Coprimality forces every set to be empty.
    """
    p = _pair(a, b)
    a, b = p.a, p.b
    ab = a * b
    rs = range(1, ab + 1)
    return {
        "a,b": {r for r in rs if r % a == 0 and r % b == 0 and r % ab != 0},
        "a,ab": {r for r in rs if r % a == 0 and r % ab == 0 and r % b != 0},
        "b,ab": {r for r in rs if r % b == 0 and r % ab == 0 and r % a != 0},
    }


def numeric_contribution_check(a, b=None, which: str = "a", K: int | None = None) -> complex:
    """Float value of one contribution: the s^-1 coefficient of the r-sum over its support."""
    p = _pair(a, b)
    K = default_truncation(2) if K is None else K
    low, coeffs = product_sum([p.a, p.b, p.a * p.b], support(p, which), K)
    return complex(coeffs[-1 - low]) * theorem_prefactor(2, 0, p.a * p.b)


def coth_factor_direct(c: int, r: int, s: complex) -> complex:
    """1 + coth(pi (s + i r) / c) evaluated directly."""
    z = math.pi * (s + 1j * r) / c
    return 1 + cmath.cosh(z) / cmath.sinh(z)
