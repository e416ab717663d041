"""Exact rational helpers: heights, square roots, enumeration order."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from repdyn.rationals import (
    enumerate_nonzero_integers,
    enumerate_rationals,
    format_rational,
    height,
    height_int,
    isqrt_exact,
    normalize,
    parse_rational,
    sqrt_exact,
)


def test_normalize_reduces_and_fixes_sign():
    q = normalize(6, -4)
    assert q == Fraction(-3, 2)
    assert q.denominator == 2
    with pytest.raises(ZeroDivisionError):
        normalize(1, 0)


def test_height_examples():
    assert height(Fraction(0)) == 1
    assert height(7) == 7
    assert height(-7) == 7
    assert height(Fraction(-29, 16)) == 29
    assert height(Fraction(3, 100)) == 100
    # height is computed on the reduced form
    assert height(Fraction(2, 4)) == 2


def test_height_int_examples():
    assert height_int(0) == 0
    assert height_int(-12) == 12


@pytest.mark.parametrize("n,root", [(0, 0), (1, 1), (49, 7), (2, None), (-4, None)])
def test_isqrt_exact(n, root):
    assert isqrt_exact(n) == root


def test_sqrt_exact_examples():
    assert sqrt_exact(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_exact(0) == 0
    assert sqrt_exact(Fraction(2)) is None
    assert sqrt_exact(Fraction(-9, 4)) is None
    assert sqrt_exact(Fraction(1, 3)) is None


@given(st.fractions(min_value=-1000, max_value=1000, max_denominator=1000))
def test_sqrt_exact_round_trip(r):
    """The square of any rational is recognized and its root recovered."""
    root = sqrt_exact(r * r)
    assert root == abs(r)


@given(st.fractions(min_value=-1000, max_value=1000, max_denominator=1000))
def test_sqrt_exact_result_squares_back(q):
    root = sqrt_exact(q)
    if root is not None:
        assert root >= 0
        assert root * root == q


def test_enumerate_nonzero_integers_order_and_content():
    got = enumerate_nonzero_integers(4)
    assert got == [-1, 1, -2, 2, -3, 3, -4, 4]
    assert 0 not in got


def test_enumerate_rationals_prefix():
    assert enumerate_rationals(2) == [
        Fraction(-1),
        Fraction(1),
        Fraction(-2),
        Fraction(2),
        Fraction(-1, 2),
        Fraction(1, 2),
    ]


def test_enumerate_rationals_complete_and_duplicate_free():
    bound = 6
    got = enumerate_rationals(bound)
    brute = {
        Fraction(a, b)
        for a in range(-bound, bound + 1)
        for b in range(1, bound + 1)
        if a != 0 and math.gcd(abs(a), b) == 1 and max(abs(a), b) <= bound
    }
    assert len(got) == len(set(got)), "enumeration repeats a value"
    assert set(got) == brute
    # grouped by height level, i.e. heights are non-decreasing
    heights = [height(q) for q in got]
    assert heights == sorted(heights)


def test_enumerate_rationals_level_order_is_denominator_then_numerator():
    got = enumerate_rationals(3)
    level3 = [q for q in got if height(q) == 3]
    assert level3 == [
        Fraction(-3),
        Fraction(3),
        Fraction(-3, 2),
        Fraction(3, 2),
        Fraction(-2, 3),
        Fraction(-1, 3),
        Fraction(1, 3),
        Fraction(2, 3),
    ]


@pytest.mark.parametrize(
    "text,value",
    [("3", Fraction(3)), ("-29/16", Fraction(-29, 16)), (" 1/2 ", Fraction(1, 2)), ("0.25", Fraction(1, 4))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


def test_parse_rational_rejects_garbage():
    with pytest.raises(ValueError):
        parse_rational("one half")
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_format_round_trip():
    for q in enumerate_rationals(5):
        assert parse_rational(format_rational(q)) == q
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
