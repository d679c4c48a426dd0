"""Tests for rational parsing and formatting."""

from fractions import Fraction

import pytest
from leibsplit.errors import ParseError
from leibsplit.utils import basis_tuples, format_rational, parse_rational


def test_parse_integer_string():
    assert parse_rational("7") == Fraction(7)
    assert parse_rational("-3") == Fraction(-3)


def test_parse_fraction_string():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational("1/-2") == Fraction(-1, 2)
    assert parse_rational("-1/-2") == Fraction(1, 2)


def test_parse_plain_int():
    assert parse_rational(5) == Fraction(5)


def test_parse_rejects_garbage():
    for bad in ["", "1.5", "a/b", "1//2", "1/2/3"]:
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_parse_rejects_zero_denominator():
    with pytest.raises(ParseError):
        parse_rational("1/0")


def test_parse_rejects_bool():
    with pytest.raises(ParseError):
        parse_rational(True)


def test_parse_rejects_whitespace():
    for bad in [" 1", "1 ", "1 / 2", "3\n"]:
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(0) == "0"


def test_basis_tuples_order():
    assert list(basis_tuples(2, 2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(list(basis_tuples(3, 3))) == 27
