"""Exact rational parsing and formatting."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from ..constants import NOT_OFFERED_TOKEN
from ..models.pricing import NOT_OFFERED, NotOffered, Price

Rational = Fraction


def to_rational(x: object) -> Fraction:
    """Convert ints, Fractions, decimal or ``"num/den"`` strings exactly.

    Floats go through their shortest decimal repr, so ``0.1`` becomes 1/10.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)  # type: ignore[arg-type]
    if isinstance(x, float):
        return Fraction(repr(x))
    if isinstance(x, str):
        text = x.strip()
        if not text:
            raise ValueError("empty rational")
        return Fraction(text)
    raise TypeError(f"cannot read {type(x).__name__} as a rational")


def to_price(x: object) -> Price:
    """Like :func:`to_rational`, with ``"inf"``/``None`` meaning not offered."""
    if x is None or x is NOT_OFFERED:
        return NOT_OFFERED
    if isinstance(x, str) and x.strip().lower() in (NOT_OFFERED_TOKEN, "infinity", "+inf"):
        return NOT_OFFERED
    if isinstance(x, float) and x == float("inf"):
        return NOT_OFFERED
    return to_rational(x)


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_price(price: Price) -> str:
    if isinstance(price, NotOffered):
        return NOT_OFFERED_TOKEN
    return format_rational(price)
