"""Exact rationals, polynomial interpolation and the float precision knobs.

Rationals are :class:`fractions.Fraction`, which already keeps values in
lowest terms with a positive denominator and supports arbitrary precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import InputError

Rational = Fraction
RationalLike = Union[int, Fraction]

# Working precision of the numpy code paths. Swap both for an extended type
# (np.longdouble / np.clongdouble) to raise precision; the numba kernels are
# compiled for float64 only.
FLOAT_DTYPE = np.float64
COMPLEX_DTYPE = np.complex128

ComplexValue = complex


def gcd(u: int, v: int) -> int:
    """Greatest common divisor of two nonnegative integers, gcd(0, 0) = 0."""
    return math.gcd(u, v)


def rational(numerator: RationalLike, denominator: RationalLike = 1) -> Fraction:
    """Build a normalized rational; a zero denominator raises ZeroDivisionError."""
    return Fraction(numerator, denominator)


def rational_arith(x: RationalLike, y: RationalLike, op: str) -> Fraction:
    x, y = Fraction(x), Fraction(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y == 0:
            raise ZeroDivisionError("rational division by zero")
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def format_rational(x: RationalLike) -> str:
    """Text form ``p/q`` (or ``p`` when q = 1) with the sign on the numerator."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip().replace("−", "-"))


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial with exact rational coefficients; ``coefficients[j]`` multiplies t**j."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[RationalLike]):
        coeffs = [Fraction(c) for c in coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [Fraction(0)]
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        if len(self.coefficients) == 1 and self.coefficients[0] == 0:
            return -1
        return len(self.coefficients) - 1

    def coefficient(self, j: int) -> Fraction:
        if 0 <= j < len(self.coefficients):
            return self.coefficients[j]
        return Fraction(0)

    def __call__(self, t: RationalLike) -> Fraction:
        return poly_eval(self, t)

    def __str__(self) -> str:
        terms = []
        for j in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[j]
            if c == 0 and self.degree >= 0:
                continue
            mag = abs(c)
            if j == 0:
                body = format_rational(mag)
            else:
                power = "t" if j == 1 else f"t^{j}"
                if mag == 1:
                    body = power
                elif mag.denominator == 1:
                    body = f"{mag}{power}"
                else:
                    body = f"({mag}){power}"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)


def poly_eval(p: RationalPolynomial, t: RationalLike) -> Fraction:
    """Horner evaluation in exact arithmetic."""
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * t + c
    return acc


def interpolate(points: Sequence[tuple[int, RationalLike]]) -> RationalPolynomial:
    """Exact Newton interpolation through ``(t, value)`` pairs.

    Returns the unique polynomial of degree below ``len(points)``.
    """
    if not points:
        raise InputError("interpolation needs at least one point")
    xs = [Fraction(t) for t, _ in points]
    if len(set(xs)) != len(xs):
        raise InputError("interpolation abscissae must be distinct")
    table = [Fraction(v) for _, v in points]
    n = len(xs)
    # divided differences, in place
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    # expand the Newton form into monomial coefficients
    coeffs = [Fraction(0)] * n
    coeffs[0] = table[n - 1]
    deg = 0
    for k in range(n - 2, -1, -1):
        # coeffs <- coeffs * (t - xs[k]) + table[k]
        new = [Fraction(0)] * n
        for j in range(deg + 1):
            new[j + 1] += coeffs[j]
            new[j] -= coeffs[j] * xs[k]
        new[0] += table[k]
        coeffs = new
        deg += 1
    return RationalPolynomial(coeffs)
