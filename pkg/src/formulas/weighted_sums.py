"""Weighted sums sum_{d(n) <= p} lambda^n n^mu with lambda in a number field.

Three closed forms are available, chosen by lambda^{a_1}:

- lambda^{a_1} != 1: the Eulerian-number form (any mu >= 1), evaluated in
  the rearranged shape that never raises 0 to the power 0;
- lambda^{a_1} != 1, mu = 1: the simplified first-moment form;
- lambda^{a_1} = 1, mu = 1: the root-of-unity form.

The alternating sum (lambda = -1, a_1 odd) is the first-moment form
specialised to rationals.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Literal

from ..core.errors import DomainError, PreconditionError
from ..exactmath import NumberFieldElement, as_element, eulerian_polynomial, nf_pow, one, zero
from ..semigroup import Generators, PAperySet
from .power_sums import resolve_apery

logger = logging.getLogger(__name__)

WeightedForm = Literal["remark", "theorem"]


def check_lambda(lam: NumberFieldElement) -> None:
    """Reject lambda = 0 and lambda = 1."""
    if lam.is_zero():
        raise DomainError("lambda must be nonzero")
    if lam.is_one():
        raise DomainError("lambda must differ from 1")


@dataclass(frozen=True)
class WeightedSumRequest:
    """Parameters of s_{lambda,p}^{(mu)}(a_1, ..., a_k)."""
    gens: Generators
    p: int
    mu: int
    lam: NumberFieldElement

    def __post_init__(self):
        object.__setattr__(self, "lam", as_element(self.lam))
        if self.p < 0:
            raise DomainError(f"p must be non-negative, got {self.p}")
        if self.mu < 1:
            raise DomainError(f"mu must be positive, got {self.mu}")
        check_lambda(self.lam)


def lambda_power_is_one(lam: NumberFieldElement, exponent: int) -> bool:
    """Exact test of lambda^exponent == 1."""
    return nf_pow(lam, exponent).is_one()


def _require_not_root(lam: NumberFieldElement, a1: int) -> NumberFieldElement:
    lam_a = nf_pow(lam, a1)
    if lam_a.is_one():
        raise PreconditionError(
            f"lambda^{a1} = 1, the Eulerian-number form needs lambda^a_1 != 1",
            alternative="weighted_sum_lambda_root (mu = 1)",
        )
    return lam_a


def weighted_power_sum(
    req: WeightedSumRequest,
    apery: PAperySet | None = None,
    form: WeightedForm = "remark",
) -> NumberFieldElement:
    """Evaluate sum_{d(n) <= p} lambda^n n^mu for lambda^{a_1} != 1.

    With L = lambda^{a_1}, E_n(x) = sum_j <n over n-j> x^j and m_i the
    p-Apery set:

        sum_{n=0}^{mu-1} (-a_1)^n / (L-1)^{n+1} C(mu, n) E_n(L) sum_i m_i^{mu-n} lambda^{m_i}
        + (-a_1)^mu / (L-1)^{mu+1} E_mu(L) sum_i lambda^{m_i}
        + (-1)^{mu+1} / (lambda-1)^{mu+1} E_mu(lambda)

    form="theorem" folds the middle block into the first sum using
    0^0 = 1, as the identity is usually stated; both forms agree.

    Raises:
        PreconditionError: If lambda^{a_1} = 1
    """
    gens, p, mu, lam = req.gens, req.p, req.mu, req.lam
    a = gens.a1
    lam_a = _require_not_root(lam, a)
    ap = resolve_apery(gens, p, apery)

    lam_m = [nf_pow(lam, mi) for mi in ap.m]
    inv = 1 / (lam_a - 1)

    def moment(e: int) -> NumberFieldElement:
        # Python's 0 ** 0 == 1 supplies the 0^0 convention for form="theorem".
        total = zero(lam.modulus)
        for mi, w in zip(ap.m, lam_m):
            c = mi ** e
            if c:
                total = total + w * c
        return total

    last = mu if form == "theorem" else mu - 1
    total = zero(lam.modulus)
    inv_power = inv
    for n in range(last + 1):
        coefficient = Fraction((-a) ** n * comb(mu, n))
        total = total + inv_power * eulerian_polynomial(n, lam_a) * moment(mu - n) * coefficient
        inv_power = inv_power * inv
    if form == "remark":
        # inv_power is now 1/(L-1)^{mu+1}.
        weights = zero(lam.modulus)
        for w in lam_m:
            weights = weights + w
        total = total + inv_power * eulerian_polynomial(mu, lam_a) * weights * (-a) ** mu
    elif form != "theorem":
        raise DomainError(f"unknown form {form!r}")

    tail = eulerian_polynomial(mu, lam) / nf_pow(lam - 1, mu + 1)
    total = total + tail * (-1) ** (mu + 1)
    logger.debug(f"Weighted power sum for {gens.values}, p={p}, mu={mu} evaluated ({form} form)")
    return total


def weighted_sum_mu1(
    gens: Generators,
    p: int,
    lam: NumberFieldElement | int | Fraction,
    apery: PAperySet | None = None,
) -> NumberFieldElement:
    """First-moment form for lambda^{a_1} != 1:

        1/(L-1) sum_i m_i lambda^{m_i} - a_1 L/(L-1)^2 sum_i lambda^{m_i} + lambda/(lambda-1)^2
    """
    lam = as_element(lam)
    check_lambda(lam)
    a = gens.a1
    lam_a = _require_not_root(lam, a)
    ap = resolve_apery(gens, p, apery)

    first = zero(lam.modulus)
    second = zero(lam.modulus)
    for mi in ap.m:
        w = nf_pow(lam, mi)
        first = first + w * mi
        second = second + w
    d = lam_a - 1
    return first / d - lam_a * a * second / (d * d) + lam / nf_pow(lam - 1, 2)


def weighted_sum_lambda_root(
    gens: Generators,
    p: int,
    lam: NumberFieldElement | int | Fraction,
    apery: PAperySet | None = None,
) -> NumberFieldElement:
    """Root-of-unity form for lambda^{a_1} = 1, lambda != 1:

        (1/2a_1) sum_i m_i^2 lambda^i - (1/2) sum_i m_i lambda^i + lambda/(lambda-1)^2

    Raises:
        PreconditionError: If lambda^{a_1} != 1
    """
    lam = as_element(lam)
    check_lambda(lam)
    a = gens.a1
    if not lambda_power_is_one(lam, a):
        raise PreconditionError(
            f"lambda^{a} != 1, the root-of-unity form needs lambda^a_1 = 1",
            alternative="weighted_sum_mu1",
        )
    ap = resolve_apery(gens, p, apery)

    squares = zero(lam.modulus)
    linear = zero(lam.modulus)
    power = one(lam.modulus)
    for mi in ap.m:
        squares = squares + power * (mi * mi)
        linear = linear + power * mi
        power = power * lam
    return squares * Fraction(1, 2 * a) - linear * Fraction(1, 2) + lam / nf_pow(lam - 1, 2)


def alternating_sum(gens: Generators, p: int, apery: PAperySet | None = None) -> Fraction:
    """sum_{d(n) <= p} (-1)^n n for odd a_1:

        -(1/2) sum_i (-1)^{m_i} m_i + (a_1/4) sum_i (-1)^{m_i} - 1/4

    The constant is lambda/(lambda-1)^2 at lambda = -1.

    Raises:
        PreconditionError: If a_1 is even (then (-1)^{a_1} = 1)
    """
    a = gens.a1
    if a % 2 == 0:
        raise PreconditionError(
            f"a_1 = {a} is even, the alternating-sum form needs a_1 odd",
            alternative="weighted_sum_lambda_root with lambda = -1",
        )
    ap = resolve_apery(gens, p, apery)
    signed = sum(-mi if mi % 2 else mi for mi in ap.m)
    signs = sum(-1 if mi % 2 else 1 for mi in ap.m)
    return -Fraction(signed, 2) + Fraction(a * signs, 4) - Fraction(1, 4)
