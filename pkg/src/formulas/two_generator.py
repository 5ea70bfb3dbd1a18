"""Closed forms for two coprime generators a, b.

Here the p-Apery set with respect to a is {b(pa + i) : 0 <= i < a}, so every
quantity has a formula in a, b and p alone.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..core.errors import ConsistencyError, CoprimalityError, DomainError
from ..exactmath import NumberFieldElement, as_element, nf_pow, require_integer
from ..semigroup import Generators
from .weighted_sums import check_lambda, weighted_sum_lambda_root

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwoGeneratorValues:
    """g_p, n_p and s_p of <a, b>."""
    g: int
    n: int
    s: int

    def to_dict(self) -> dict[str, str]:
        return {"frobenius": str(self.g), "genus": str(self.n), "sylvester_sum": str(self.s)}


def _check_pair(a: int, b: int, minimum: int = 1) -> None:
    if a < minimum or b < minimum:
        raise DomainError(f"generators must be at least {minimum}, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise CoprimalityError(f"gcd({a}, {b}) = {gcd(a, b)}, generators must be coprime",
                               context={"generators": [a, b]})


def two_gen_closed(a: int, b: int, p: int) -> TwoGeneratorValues:
    """g_p = (p+1)ab - a - b, n_p = ((2p+1)ab - a - b + 1)/2 and

    s_p = (2(3p^2+3p+1)a^2b^2 - 3(2p+1)ab(a+b) + a^2 + b^2 + 3ab - 1)/12.
    """
    _check_pair(a, b, minimum=2)
    if p < 0:
        raise DomainError(f"p must be non-negative, got {p}")
    context = {"generators": [a, b], "p": p}
    g = (p + 1) * a * b - a - b
    n = require_integer(Fraction((2 * p + 1) * a * b - a - b + 1, 2), "two-generator p-genus", context)
    s = require_integer(
        Fraction(
            2 * (3 * p * p + 3 * p + 1) * a * a * b * b
            - 3 * (2 * p + 1) * a * b * (a + b)
            + a * a + b * b + 3 * a * b - 1,
            12,
        ),
        "two-generator p-Sylvester sum",
        context,
    )
    return TwoGeneratorValues(g=g, n=n, s=s)


def classical_two_gen(a: int, b: int) -> TwoGeneratorValues:
    """Sylvester's g(a,b) = (a-1)(b-1) - 1, n(a,b) = (a-1)(b-1)/2 and the

    Brown-Shiue sum s(a,b) = (a-1)(b-1)(2ab - a - b - 1)/12.
    """
    _check_pair(a, b, minimum=2)
    context = {"generators": [a, b], "p": 0}
    g = (a - 1) * (b - 1) - 1
    n = require_integer(Fraction((a - 1) * (b - 1), 2), "Sylvester number", context)
    s = require_integer(Fraction((a - 1) * (b - 1) * (2 * a * b - a - b - 1), 12), "Sylvester sum", context)
    return TwoGeneratorValues(g=g, n=n, s=s)


def _root_b_form(a: int, b: int, p: int, lam: NumberFieldElement, lam_a: NumberFieldElement) -> NumberFieldElement:
    # lambda^b = 1, lambda^a != 1.
    d = lam_a - 1
    return (
        Fraction(a * b * ((2 * p + 1) * a - 1), 2) / d
        - lam_a * (a * a) / (d * d)
        + lam / nf_pow(lam - 1, 2)
    )


def weighted_two_gen(
    a: int,
    b: int,
    p: int,
    lam: NumberFieldElement | int | Fraction,
) -> NumberFieldElement:
    """sum_{d(n; a, b) <= p} lambda^n n in closed form.

    Dispatch on which of lambda^a, lambda^b equals 1:
        neither: the general two-generator form;
        lambda^b = 1: the root-of-b form;
        lambda^a = 1: the root-of-unity form when a < b, otherwise the
            root-of-b form with a and b exchanged.

    Raises:
        ConsistencyError: If lambda^a = lambda^b = 1 (impossible for coprime a, b, lambda != 1)
    """
    _check_pair(a, b)
    if p < 0:
        raise DomainError(f"p must be non-negative, got {p}")
    lam = as_element(lam)
    check_lambda(lam)
    lam_a = nf_pow(lam, a)
    lam_b = nf_pow(lam, b)
    a_root, b_root = lam_a.is_one(), lam_b.is_one()

    if a_root and b_root:
        raise ConsistencyError(f"lambda^{a} = lambda^{b} = 1 with lambda != 1 contradicts gcd(a, b) = 1")
    if b_root:
        logger.debug(f"weighted_two_gen({a}, {b}): lambda^b = 1 branch")
        return _root_b_form(a, b, p, lam, lam_a)
    if a_root:
        if a < b:
            logger.debug(f"weighted_two_gen({a}, {b}): delegating to the root-of-unity form")
            return weighted_sum_lambda_root(Generators((a, b)), p, lam)
        logger.debug(f"weighted_two_gen({a}, {b}): lambda^a = 1 branch with roles exchanged")
        return _root_b_form(b, a, p, lam, lam_b)

    lam_pab = nf_pow(lam, p * a * b)
    lam_ab = nf_pow(lam, a * b)
    da, db = lam_a - 1, lam_b - 1
    first = lam / nf_pow(lam - 1, 2)
    second = lam_pab * (lam_ab * (p + 1) - p) * (a * b) / (da * db)
    third = (
        lam_pab * (lam_ab - 1) * (nf_pow(lam, a + b) * (a + b) - lam_a * a - lam_b * b)
        / (da * da * db * db)
    )
    return first + second - third
