"""Parser for weight specifications given on the command line.

Grammar:
    INT | NUM/DEN                         a rational
    zeta:M                                primitive M-th root of unity, M prime
    gauss:RE,IM                           RE + IM*i in Q(i)
    nf:modulus=c0,c1,...,1;elem=e0,e1,... general element of Q[x]/(f)
"""

from ..core.errors import DomainError, UsageError
from ..exactmath import (
    NumberFieldElement,
    element,
    gaussian,
    parse_rational,
    primitive_root_of_unity,
    rational_element,
)


def _rationals(text: str, spec: str) -> list:
    try:
        return [parse_rational(part) for part in text.split(",")]
    except DomainError as e:
        raise UsageError(f"bad lambda specification {spec!r}: {e}", cause=e) from e


def parse_lambda(spec: str) -> NumberFieldElement:
    """Parse a lambda specification into a field element.

    Raises:
        UsageError: If the text does not follow the grammar
        DomainError: If it parses but names an unsupported field (e.g. zeta:6)
    """
    text = spec.strip()
    kind, sep, body = text.partition(":")
    if not sep:
        try:
            return rational_element(parse_rational(text))
        except DomainError as e:
            raise UsageError(f"bad lambda specification {spec!r}: {e}", cause=e) from e

    kind = kind.strip().lower()
    if kind == "zeta":
        try:
            order = int(body)
        except ValueError as e:
            raise UsageError(f"bad root-of-unity order in {spec!r}", cause=e) from e
        return primitive_root_of_unity(order)

    if kind == "gauss":
        parts = _rationals(body, spec)
        if len(parts) != 2:
            raise UsageError(f"gauss: needs RE,IM, got {spec!r}")
        return gaussian(parts[0], parts[1])

    if kind == "nf":
        fields = {}
        for item in body.split(";"):
            key, eq, value = item.partition("=")
            if not eq:
                raise UsageError(f"bad nf: item {item!r} in {spec!r}")
            fields[key.strip().lower()] = value
        if set(fields) != {"modulus", "elem"}:
            raise UsageError(f"nf: needs exactly modulus=... and elem=..., got {spec!r}")
        try:
            modulus = [int(c) for c in fields["modulus"].split(",")]
        except ValueError as e:
            raise UsageError(f"modulus coefficients must be integers in {spec!r}", cause=e) from e
        return element(modulus, _rationals(fields["elem"], spec))

    raise UsageError(f"unknown lambda kind {kind!r} in {spec!r}")
