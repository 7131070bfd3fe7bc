"""Small helpers around ``fractions.Fraction``.

Every quantity in this package is an exact rational; floats are never
accepted, produced, or serialized.
"""

from __future__ import annotations

from fractions import Fraction

Rational = int | Fraction


def rat(value: Rational) -> Fraction:
    """Coerce an int or Fraction to Fraction, rejecting floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def is_integer(value: Rational) -> bool:
    return rat(value).denominator == 1


def ceil_frac(value: Rational) -> int:
    """Smallest integer >= value, exactly."""
    q = rat(value)
    return -((-q.numerator) // q.denominator)


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` with optional sign; no decimals allowed."""
    text = text.strip()
    if "." in text:
        raise ValueError(f"decimal notation not accepted (use p/q): {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def rational_to_json(value: Rational) -> dict[str, int]:
    q = rat(value)
    return {"num": q.numerator, "den": q.denominator}


def format_rational(value: Rational) -> str:
    q = rat(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
