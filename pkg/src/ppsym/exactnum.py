"""Exact integers, rationals and the extended binomial convention.

Python ints are already unbounded, and :class:`fractions.Fraction` keeps
itself in lowest terms with a positive denominator, so both are used as-is.
"""
from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["Fraction", "HALF", "binom", "as_rational", "parse_rational", "format_rational"]

HALF = Fraction(1, 2)


def binom(n: int, k: int) -> int:
    """C(n, k) with C(n, k) = 0 whenever k < 0 or k > n.

    Terms such as C(i + j, 2i - j - 1) are evaluated for every (i, j) of a
    matrix and routinely fall outside 0..n; they count as zero.
    """
    if n < 0:
        raise ValueError(f"binom requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(x: Fraction) -> str:
    """'p/q', or just 'p' when the value is an integer."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())
