"""Exact matrices U(n), w(n), st(n) and their determinants."""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exactnum import HALF, as_rational, binom, format_rational, parse_rational


class RationalMatrix:
    """Immutable dense square matrix of exact rationals."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if not rows:
            raise ValueError("matrix must have order >= 1")
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self._rows = rows

    @classmethod
    def from_function(cls, n: int, f: Callable[[int, int], object]) -> "RationalMatrix":
        return cls([[f(i, j) for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_function(n, lambda i, j: int(i == j))

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self._rows)
        return f"RationalMatrix([{body}])"

    def scaled(self, c) -> "RationalMatrix":
        c = as_rational(c)
        return RationalMatrix([[c * x for x in r] for r in self._rows])

    def to_lists(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self._rows]

    def to_csv(self) -> str:
        return "\n".join(",".join(r) for r in self.to_lists())

    def to_json(self) -> str:
        return json.dumps({"order": self.order, "entries": self.to_lists()}, separators=(",", ":"))

    @classmethod
    def from_csv(cls, text: str) -> "RationalMatrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        return cls([[parse_rational(x) for x in ln.split(",")] for ln in lines])

    @classmethod
    def from_json(cls, text: str) -> "RationalMatrix":
        data = json.loads(text)
        m = cls([[parse_rational(x) for x in r] for r in data["entries"]])
        if m.order != data["order"]:
            raise ValueError("order field does not match entries")
        return m


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"matrix order must be a positive integer, got {n!r}")


def u_entry(i: int, j: int) -> Fraction:
    return HALF * binom(i + j, 2 * i - j) + binom(i + j, 2 * i - j - 1)


def w_entry(i: int, j: int) -> int:
    return binom(i + j + 1, 2 * i - j) + binom(i + j, 2 * i - j - 1)


def st_entry(i: int, j: int) -> int:
    if i == j:
        return 1 if i == 0 else 0
    if i > j:
        return -st_entry(j, i)
    # range() is empty when the lower limit exceeds the upper one
    return sum(binom(i + j, s) for s in range(2 * i - j + 1, 2 * j - i + 1))


def build_U(n: int) -> RationalMatrix:
    _check_order(n)
    return RationalMatrix.from_function(n, u_entry)


def build_w(n: int) -> RationalMatrix:
    _check_order(n)
    return RationalMatrix.from_function(n, w_entry)


def build_st(n: int) -> RationalMatrix:
    _check_order(n)
    return RationalMatrix.from_function(n, st_entry)


BUILDERS = {"U": build_U, "w": build_w, "st": build_st}


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination on an integer matrix.

    Pivot is the first nonzero entry in the column; every row swap flips
    the sign. All divisions are exact.
    """
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def gauss_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Plain Gaussian elimination over the rationals."""
    a = [[as_rational(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        p = next((r for r in range(k, n) if a[r][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        pivot = a[k][k]
        det *= pivot
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det


def determinant(m: RationalMatrix) -> Fraction:
    """Exact determinant.

    Each row is multiplied by the lcm of its denominators so that Bareiss
    elimination runs over the integers; the product of those scale factors
    is divided back out at the end.
    """
    scale = 1
    int_rows = []
    for row in m.rows:
        d = math.lcm(*(x.denominator for x in row))
        scale *= d
        int_rows.append([x.numerator * (d // x.denominator) for x in row])
    return Fraction(bareiss_det(int_rows), scale)


def _require_integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return x.numerator


def _require_square(x: int, what: str) -> int:
    if x < 0:
        raise ArithmeticError(f"{what} is negative: {x}")
    r = math.isqrt(x)
    if r * r != x:
        raise ArithmeticError(f"{what} is not a perfect square: {x}")
    return r


def det_U(n: int) -> Fraction:
    return determinant(build_U(n))


def cssc_det(n: int) -> int:
    """2^n det U(n), required to be a positive integer."""
    value = _require_integer(2**n * det_U(n), f"2^{n} det U({n})")
    if value <= 0:
        raise ArithmeticError(f"2^{n} det U({n}) is not positive: {value}")
    return value


def tssc_sq_st(n: int) -> int:
    value = _require_integer(determinant(build_st(n)), f"det st({n})")
    _require_square(value, f"det st({n})")
    return value


def tssc_sq_w(n: int) -> int:
    value = _require_integer(determinant(build_w(n)), f"det w({n})")
    _require_square(value, f"det w({n})")
    return value


def tssc_det(n: int) -> int:
    """Integer square root of det st(n)."""
    return math.isqrt(tssc_sq_st(n))


def half_entry_relation(n: int) -> bool:
    u, w = build_U(n), build_w(n)
    return all(2 * u[i, j] == w[i, j] for i in range(n) for j in range(n))
