"""Dedekind sums s(a, b) by three routes, and the reciprocity law.

* :func:`dedekind_sawtooth` -- exact, O(b), via the sawtooth form
  ``sum_k ((k/b)) ((k a/b))``.
* :func:`dedekind_cotangent` -- float, O(b), the cotangent definition.
* :func:`dedekind_fast` -- exact, O(log b), Euclid-style recursion that
  alternates ``a mod b`` with the reciprocity swap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .errors import InputError
from .numeric import RationalLike


@dataclass(frozen=True)
class CoprimePair:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise InputError(f"a and b must be positive, got ({self.a}, {self.b})")
        g = math.gcd(self.a, self.b)
        if g != 1:
            raise InputError(f"gcd({self.a},{self.b})={g}; a and b must be coprime")

    def swapped(self) -> "CoprimePair":
        return CoprimePair(self.b, self.a)


@dataclass(frozen=True)
class ReciprocityReport:
    s_ab: Fraction
    s_ba: Fraction
    lhs: Fraction
    rhs: Fraction
    holds: bool


def _pair(a, b=None) -> CoprimePair:
    if isinstance(a, CoprimePair):
        return a
    return CoprimePair(int(a), int(b))


def sawtooth(x: RationalLike) -> Fraction:
    """((x)) = x - floor(x) - 1/2 for non-integers, 0 at integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def sawtooth_sum(a: int, b: int) -> Fraction:
    """Literal sum of ((k/b)) ((k a/b)) over k = 1..b-1, with no reduction of ``a``.

    Slow (one rational per term); kept as the direct reading of the sum.
    """
    return sum((sawtooth(Fraction(k, b)) * sawtooth(Fraction(k * a, b)) for k in range(1, b)), Fraction(0))


def _sawtooth_numerator(a: int, b: int) -> int:
    # sum (2k - b)(2 (ka mod b) - b), exact; s(a, b) = this / (4 b^2)
    if b <= _kernels.SAWTOOTH_INT64_MAX_B:
        return _kernels.active().sawtooth_numerator(a, b)
    total = 0
    j = 0
    for k in range(1, b):
        j += a
        if j >= b:
            j -= b
        total += (2 * k - b) * (2 * j - b)
    return total


def dedekind_sawtooth(a, b=None) -> Fraction:
    """Exact s(a, b) from the sawtooth sum; O(b)."""
    p = _pair(a, b)
    if p.b == 1:
        return Fraction(0)
    return Fraction(_sawtooth_numerator(p.a % p.b, p.b), 4 * p.b * p.b)


def dedekind_cotangent(a, b=None) -> float:
    """Float s(a, b) = 1/(4b) sum_k cot(pi k a / b) cot(pi k / b)."""
    p = _pair(a, b)
    if p.b == 1:
        return 0.0
    kern = _kernels.active()
    table = kern.cot_table(p.b)
    # arguments are reduced mod b before cot, so no angle leaves (0, pi)
    return kern.cot_product_sum(table, p.a % p.b, p.b) / (4 * p.b)


def dedekind_row(b: int):
    """Float cotangent sums and exact sawtooth sums for every a coprime to b.

    Returns ``(cot, numer)`` indexed by a in [0, b): ``cot[a]`` approximates
    s(a, b) and ``numer[a] / (4 b**2)`` is s(a, b) exactly. Entries with
    gcd(a, b) > 1 are left at zero. One cotangent table serves the row.
    """
    if b < 1:
        raise InputError("b must be positive")
    if b > _kernels.SAWTOOTH_INT64_MAX_B:
        raise InputError(f"row evaluation limited to b <= {_kernels.SAWTOOTH_INT64_MAX_B}")
    cot, numer = _kernels.active().dedekind_row(b)
    return cot / (4 * b), numer


def reciprocity_rhs(a: int, b: int) -> Fraction:
    """-1/4 + (a/b + 1/(ab) + b/a) / 12."""
    return Fraction(-1, 4) + Fraction(a * a + 1 + b * b, 12 * a * b)


def dedekind_fast(a, b=None) -> Fraction:
    """Exact s(a, b) in as many steps as Euclid's algorithm on (a, b).

    Reduce ``a`` mod ``b``, then trade s(a, b) for rhs(a, b) - s(b, a);
    stop at b = 1 where the sum is empty.
    """
    p = _pair(a, b)
    a, b = p.a % p.b, p.b
    # sum of sign * (a^2 + b^2 + 1) / (12 a b) kept as a reduced num/den pair;
    # the -sign/4 parts are tallied in `quarters`
    num, den = 0, 1
    quarters = 0
    sign = 1
    while b > 1:
        y = 12 * a * b
        num = num * y + sign * (a * a + b * b + 1) * den
        den *= y
        g = math.gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        quarters += sign
        a, b = b % a, a
        sign = -sign
    return Fraction(num, den) - Fraction(quarters, 4)


def reciprocity_check(a, b=None) -> ReciprocityReport:
    p = _pair(a, b)
    s_ab = dedekind_sawtooth(p)
    s_ba = dedekind_sawtooth(p.swapped())
    lhs = s_ab + s_ba
    rhs = reciprocity_rhs(p.a, p.b)
    return ReciprocityReport(s_ab=s_ab, s_ba=s_ba, lhs=lhs, rhs=rhs, holds=lhs == rhs)


def mod_reduction_check(a: int, b: int) -> bool:
    """Does s(a mod b, b) equal the sawtooth sum evaluated with ``a`` itself?"""
    if a <= b:
        raise InputError(f"mod reduction needs a > b, got a={a}, b={b}")
    p = _pair(a, b)
    return dedekind_sawtooth(p.a % p.b, p.b) == sawtooth_sum(p.a, p.b)
