"""Wire encoding of exact values.

Integers become decimal strings, rationals "num/den" strings and
number-field elements {"modulus": [...], "coeffs": [...]} objects, so no
value ever passes through a float or a fixed-width integer.
"""

from fractions import Fraction
from typing import Any

from .number_field import NumberFieldElement
from .rational import format_rational


def serialize_value(value: Any) -> Any:
    """Recursively encode ints, Fractions, field elements, lists and dicts."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, NumberFieldElement):
        return value.to_dict()
    if isinstance(value, dict):
        return {k: serialize_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [serialize_value(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")
