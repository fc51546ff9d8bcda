import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ppsym.exactnum import HALF, binom, format_rational, parse_rational


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (1, -1, 0), (0, 0, 1), (3, 4, 0), (5, 5, 1)])
def test_binom_values(n, k, expected):
    assert binom(n, k) == expected


def test_binom_rejects_negative_n():
    with pytest.raises(ValueError):
        binom(-1, 0)


def test_pascal_rule_with_extended_convention():
    for n in range(1, 31):
        for k in range(-2, n + 3):
            assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)


def test_binom_beyond_64_bits():
    assert binom(128, 64) > 2**64
    assert binom(128, 64) == math.factorial(128) // math.factorial(64) ** 2


def test_rational_examples():
    assert HALF + HALF == 1
    assert 2 * HALF == 1
    assert HALF * HALF == Fraction(1, 4)
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 0)


rationals = st.fractions(max_denominator=10**6)


@given(rationals, rationals, rationals)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(rationals)
def test_canonical_form(x):
    assert x.denominator > 0
    assert math.gcd(x.numerator, x.denominator) == 1
    assert parse_rational(format_rational(x)) == x


def test_format_rational():
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"
