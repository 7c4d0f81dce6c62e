"""Bit-exact "p/q" serialization of rationals used by every JSON interface."""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


def format_rational(x: Fraction) -> str:
    """Render with q > 0 and gcd(p, q) = 1; integers render without the slash."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational 'p/q': {text!r}") from exc


def encode_vector(coords) -> list[str]:
    return [format_rational(c) for c in coords]


def decode_vector(items) -> tuple[Fraction, ...]:
    return tuple(parse_rational(str(c)) for c in items)


def encode_matrix(rows) -> list[list[str]]:
    return [encode_vector(row) for row in rows]


def decode_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(decode_vector(row) for row in rows)
