"""Utility functions for leibsplit."""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from typing import Iterator

from leibsplit.errors import ParseError

_RATIONAL_RE = re.compile(r"^([+-]?)(\d+)(?:/([+-]?)(\d+))?$")


def parse_rational(text: str | int) -> Fraction:
    """Parse ``"p/q"`` or ``"n"``; signs may sit on either part, whitespace is rejected."""
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    match = _RATIONAL_RE.fullmatch(text) if isinstance(text, str) else None
    if match is None:
        raise ParseError(f"not a rational: {text!r}")
    num_sign, num, den_sign, den = match.groups()
    denominator = int(den) if den is not None else 1
    if denominator == 0:
        raise ParseError(f"zero denominator: {text!r}")
    sign = -1 if (num_sign == "-") != (den_sign == "-") else 1
    return Fraction(sign * int(num), denominator)


def format_rational(value: Fraction | int) -> str:
    """Canonical string form: ``"n"`` for integers, ``"p/q"`` otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def basis_tuples(dim: int, arity: int) -> Iterator[tuple[int, ...]]:
    """All index tuples of length ``arity`` in lexicographic order."""
    return itertools.product(range(dim), repeat=arity)
