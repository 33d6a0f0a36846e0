"""Exact rational scalars.

Every numeric value in the package is an :data:`ExactScalar`, a rational in
lowest terms with a positive denominator.  Equality is structural; there is no
tolerance anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

ExactScalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

Number = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """A denominator vanished exactly."""

    def __init__(self, where: str):
        super().__init__(where)
        self.where = where


class ConstraintError(ValueError):
    """A parameter point violates an identity's side conditions."""


def scalar(x: Number | str) -> Fraction:
    if isinstance(x, str):
        return parse(x)
    return Fraction(x)


def add(x: Number, y: Number) -> Fraction:
    return Fraction(x) + y


def mul(x: Number, y: Number) -> Fraction:
    return Fraction(x) * y


def div(x: Number, y: Number, where: str = "div") -> Fraction:
    if y == 0:
        raise PoleError(f"{where}: division by zero")
    return Fraction(x) / y


def ipow(x: Number, e: int, where: str = "ipow") -> Fraction:
    if e < 0 and x == 0:
        raise PoleError(f"{where}: zero raised to {e}")
    return Fraction(x) ** e


def parse(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into an exact scalar."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def fmt(x: Fraction) -> str:
    """Render as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def preview(x: Fraction, digits: int = 12) -> str:
    """Decimal rendering for human eyes only; never compared."""
    try:
        return format(float(x), f".{digits}g")
    except OverflowError:
        return "-inf" if x < 0 else "inf"
