"""Arithmetic in number fields Q[x]/(f(x)).

An element is the residue polynomial of degree < deg f with exact rational
coefficients. The modulus f is a monic integer polynomial stored low-to-high
(so x^2 + 1 is (1, 0, 1)); its irreducibility is the caller's contract and
is never tested. Rationals live in the degree-1 field Q[x]/(x), the scalar
case, whose single coefficient is the value itself.

Example:
    i = generator(GAUSSIAN_MODULUS)
    i * i == -1                    # True
    nf_inv(gaussian(4, 3))         # (4 - 3i)/25
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from ..core.errors import (
    DomainError,
    ModulusMismatchError,
    NumberFieldZeroDivisionError,
    ZeroDivisorError,
)
from .rational import format_rational, parse_rational

Modulus = tuple[int, ...]

SCALAR_MODULUS: Modulus = (0, 1)
GAUSSIAN_MODULUS: Modulus = (1, 0, 1)
CUBE_ROOT_TWO_MODULUS: Modulus = (-2, 0, 0, 1)


def _check_modulus(modulus: Sequence[int]) -> Modulus:
    modulus = tuple(modulus)
    if len(modulus) < 2:
        raise DomainError(f"modulus must have degree >= 1, got {list(modulus)}")
    if any(isinstance(c, bool) or not isinstance(c, int) for c in modulus):
        raise DomainError(f"modulus coefficients must be integers, got {list(modulus)}")
    if modulus[-1] != 1:
        raise DomainError(f"modulus must be monic (leading coefficient 1), got {list(modulus)}")
    return modulus


def _trim(poly: list[Fraction]) -> list[Fraction]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _reduce(poly: list[Fraction], modulus: Modulus) -> tuple[Fraction, ...]:
    """Reduce a polynomial modulo the monic modulus to exactly deg f coefficients."""
    degree = len(modulus) - 1
    poly = list(poly)
    for top in range(len(poly) - 1, degree - 1, -1):
        c = poly[top]
        if c:
            shift = top - degree
            for j in range(degree):
                if modulus[j]:
                    poly[shift + j] -= c * modulus[j]
            poly[top] = Fraction(0)
    poly = poly[:degree]
    poly.extend([Fraction(0)] * (degree - len(poly)))
    return tuple(poly)


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Polynomial long division over Q; b must be nonzero and trimmed."""
    rem = list(a)
    if len(rem) < len(b):
        return [], _trim(rem)
    quot = [Fraction(0)] * (len(rem) - len(b) + 1)
    lead = b[-1]
    for k in range(len(rem) - len(b), -1, -1):
        c = rem[k + len(b) - 1] / lead
        quot[k] = c
        if c:
            for j, y in enumerate(b):
                rem[k + j] -= c * y
    return _trim(quot), _trim(rem[: len(b) - 1])


@dataclass(frozen=True, eq=False)
class NumberFieldElement:
    """Element of Q[x]/(modulus).

    Attributes:
        modulus: Monic integer polynomial, coefficients low-to-high
        coeffs: deg(modulus) rational coefficients of the residue, low-to-high
    """
    modulus: Modulus
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        modulus = _check_modulus(self.modulus)
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != len(modulus) - 1:
            raise DomainError(
                f"expected {len(modulus) - 1} coefficients for modulus {list(modulus)}, got {len(coeffs)}"
            )
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        """Degree of the field over Q."""
        return len(self.modulus) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_one(self) -> bool:
        return self.is_rational() and self.coeffs[0] == 1

    def to_rational(self) -> Fraction:
        """Return the value as a Fraction; only valid for rational elements."""
        if not self.is_rational():
            raise DomainError(f"{self} is not rational")
        return self.coeffs[0]

    def _coerce(self, other: Any) -> "NumberFieldElement | None":
        if isinstance(other, NumberFieldElement):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return coerce(other, self.modulus)
        return None

    def __add__(self, other: Any) -> "NumberFieldElement":
        other = self._coerce(other)
        return NotImplemented if other is None else nf_add(self, other)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "NumberFieldElement":
        other = self._coerce(other)
        return NotImplemented if other is None else nf_sub(self, other)

    def __rsub__(self, other: Any) -> "NumberFieldElement":
        other = self._coerce(other)
        return NotImplemented if other is None else nf_sub(other, self)

    def __mul__(self, other: Any) -> "NumberFieldElement":
        other = self._coerce(other)
        return NotImplemented if other is None else nf_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "NumberFieldElement":
        other = self._coerce(other)
        return NotImplemented if other is None else nf_mul(self, nf_inv(other))

    def __rtruediv__(self, other: Any) -> "NumberFieldElement":
        other = self._coerce(other)
        return NotImplemented if other is None else nf_mul(other, nf_inv(self))

    def __neg__(self) -> "NumberFieldElement":
        return NumberFieldElement(self.modulus, tuple(-c for c in self.coeffs))

    def __pow__(self, exponent: int) -> "NumberFieldElement":
        if exponent < 0:
            return nf_pow(nf_inv(self), -exponent)
        return nf_pow(self, exponent)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, NumberFieldElement):
            return self.modulus == other.modulus and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.modulus, self.coeffs))

    def __str__(self) -> str:
        terms = []
        for power, c in enumerate(self.coeffs):
            if not c:
                continue
            if power == 0:
                terms.append(str(c))
            elif power == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{power}")
        return " + ".join(terms) if terms else "0"

    def to_dict(self) -> dict[str, Any]:
        """Serialize: integer modulus list and "num/den" coefficient strings."""
        return {
            "modulus": list(self.modulus),
            "coeffs": [format_rational(c) for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "NumberFieldElement":
        try:
            modulus = [int(c) for c in data["modulus"]]
            coeffs = [parse_rational(str(c)) for c in data["coeffs"]]
        except (KeyError, TypeError, ValueError) as e:
            raise DomainError(f"malformed number-field element: {e}", cause=e) from e
        return cls(tuple(modulus), tuple(coeffs))


def _same_field(a: NumberFieldElement, b: NumberFieldElement) -> None:
    if a.modulus != b.modulus:
        raise ModulusMismatchError(
            f"cannot combine elements of Q[x]/({list(a.modulus)}) and Q[x]/({list(b.modulus)})",
            context={"left": list(a.modulus), "right": list(b.modulus)},
        )


def nf_add(a: NumberFieldElement, b: NumberFieldElement) -> NumberFieldElement:
    _same_field(a, b)
    return NumberFieldElement(a.modulus, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def nf_sub(a: NumberFieldElement, b: NumberFieldElement) -> NumberFieldElement:
    _same_field(a, b)
    return NumberFieldElement(a.modulus, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def nf_mul(a: NumberFieldElement, b: NumberFieldElement) -> NumberFieldElement:
    """Multiply and reduce modulo the shared modulus."""
    _same_field(a, b)
    if a.degree == 1:
        return NumberFieldElement(a.modulus, (a.coeffs[0] * b.coeffs[0],))
    return NumberFieldElement(a.modulus, _reduce(_poly_mul(a.coeffs, b.coeffs), a.modulus))


def nf_inv(a: NumberFieldElement) -> NumberFieldElement:
    """Return the multiplicative inverse via the extended Euclidean algorithm over Q.

    Raises:
        NumberFieldZeroDivisionError: If a is zero
        ZeroDivisorError: If gcd(a, modulus) is not constant (reducible modulus)
    """
    if a.is_zero():
        raise NumberFieldZeroDivisionError(f"inverse of zero in Q[x]/({list(a.modulus)})")
    if a.is_rational():
        return coerce(1 / a.coeffs[0], a.modulus)

    # Invariant: r_i = s_i * a (mod modulus).
    r0 = [Fraction(c) for c in a.modulus]
    r1 = _trim(list(a.coeffs))
    s0: list[Fraction] = []
    s1 = [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if len(r0) > 1:
        raise ZeroDivisorError(
            f"{a} is a zero divisor: modulus {list(a.modulus)} is not irreducible",
            context={"modulus": list(a.modulus)},
        )
    scale = 1 / r0[0]
    return NumberFieldElement(a.modulus, _reduce([c * scale for c in s0], a.modulus))


def nf_pow(a: NumberFieldElement, e: int) -> NumberFieldElement:
    """Binary exponentiation; a^0 = 1."""
    if e < 0:
        raise DomainError(f"exponent must be non-negative, got {e}")
    result = one(a.modulus)
    base = a
    while e:
        if e & 1:
            result = nf_mul(result, base)
        e >>= 1
        if e:
            base = nf_mul(base, base)
    return result


def element(modulus: Sequence[int], coeffs: Sequence[int | Fraction]) -> NumberFieldElement:
    """Build the class of an arbitrary polynomial (any length) modulo modulus."""
    modulus = _check_modulus(modulus)
    return NumberFieldElement(modulus, _reduce([Fraction(c) for c in coeffs], modulus))


def coerce(value: int | Fraction, modulus: Sequence[int] = SCALAR_MODULUS) -> NumberFieldElement:
    """Embed a rational into Q[x]/(modulus)."""
    modulus = _check_modulus(modulus)
    return NumberFieldElement(modulus, (Fraction(value),) + (Fraction(0),) * (len(modulus) - 2))


def rational_element(value: int | Fraction) -> NumberFieldElement:
    """A rational as an element of the scalar field Q[x]/(x)."""
    return coerce(value, SCALAR_MODULUS)


def one(modulus: Sequence[int]) -> NumberFieldElement:
    return coerce(1, modulus)


def zero(modulus: Sequence[int]) -> NumberFieldElement:
    return coerce(0, modulus)


def generator(modulus: Sequence[int]) -> NumberFieldElement:
    """The class of x, i.e. the root the field is generated by."""
    return element(modulus, [0, 1])


def gaussian(re: int | Fraction, im: int | Fraction) -> NumberFieldElement:
    """re + im*i in Q(i) = Q[x]/(x^2 + 1)."""
    return NumberFieldElement(GAUSSIAN_MODULUS, (Fraction(re), Fraction(im)))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def cyclotomic_modulus(m: int) -> Modulus:
    """The cyclotomic polynomial 1 + x + ... + x^{m-1} for prime m.

    Raises:
        DomainError: If m is not prime
    """
    if not _is_prime(m):
        raise DomainError(f"cyclotomic fields are supported for prime orders only, got {m}")
    return (1,) * m


def primitive_root_of_unity(m: int) -> NumberFieldElement:
    """zeta_m as the generator of Q[x]/(Phi_m) for prime m."""
    return generator(cyclotomic_modulus(m))


def as_element(value: "NumberFieldElement | int | Fraction") -> NumberFieldElement:
    """Accept a rational wherever a field element is expected."""
    if isinstance(value, NumberFieldElement):
        return value
    return rational_element(value)
