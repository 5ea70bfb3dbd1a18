"""Exact rational helpers.

Rational is fractions.Fraction: always reduced, denominator positive,
arbitrary precision on both sides. This module adds the "num/den" codec
used by the CLI and the integrality checks the closed forms rely on.
"""

import re
from fractions import Fraction
from typing import Any

from ..core.errors import ConsistencyError, DomainError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def to_rational(value: int | Fraction) -> Fraction:
    """Coerce an int or Fraction into a Rational, refusing floats."""
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise DomainError(f"expected an exact integer or rational, got {type(value).__name__}")
    return Fraction(value)


def format_rational(value: int | Fraction) -> str:
    """Serialize as "num/den" (integers become "n/1")."""
    q = to_rational(value)
    return f"{q.numerator}/{q.denominator}"


def format_integer(value: int) -> str:
    """Serialize an integer as a decimal string."""
    return str(int(value))


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" or a plain decimal integer.

    Raises:
        DomainError: If the text is malformed or the denominator is zero
    """
    match = _RATIONAL_RE.match(text)
    if not match:
        raise DomainError(f"malformed rational {text!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def require_integer(value: Fraction | int, what: str, context: dict[str, Any] | None = None) -> int:
    """Return value as int, raising ConsistencyError if it is not integral."""
    q = Fraction(value)
    if q.denominator != 1:
        raise ConsistencyError(f"{what} evaluated to non-integer {q}", context=context)
    return q.numerator
