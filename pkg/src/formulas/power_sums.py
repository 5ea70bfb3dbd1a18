"""Power sums over the complement of S_p from the p-Apery set.

With m_i = m_i^{(p)} and a = a_1:

    s_p^{(mu)} = 1/(mu+1) sum_{kappa=0}^{mu} C(mu+1, kappa) B_kappa a^{kappa-1} sum_i m_i^{mu+1-kappa}
                 + B_{mu+1}/(mu+1) (a^{mu+1} - 1)

and the mu = 0, 1 specialisations give the p-genus and the p-Sylvester sum.
Every intermediate is an exact Fraction; results are checked to be integers.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..core.errors import DomainError
from ..exactmath import bernoulli, require_integer
from ..semigroup import Generators, PAperySet, apery_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PowerSumRequest:
    """Parameters of s_p^{(mu)}(a_1, ..., a_k)."""
    gens: Generators
    p: int
    mu: int

    def __post_init__(self):
        if self.p < 0:
            raise DomainError(f"p must be non-negative, got {self.p}")
        if self.mu < 0:
            raise DomainError(f"mu must be non-negative, got {self.mu}")


def resolve_apery(gens: Generators, p: int, apery: PAperySet | None) -> PAperySet:
    """Return the given Apery set after checking it matches, or compute it."""
    if apery is None:
        return apery_set(gens, p)
    if apery.gens != gens or apery.p != p:
        raise DomainError(
            f"Apery set for {apery.gens.values}, p={apery.p} does not match {gens.values}, p={p}"
        )
    return apery


def _context(gens: Generators, p: int, **extra) -> dict:
    return {"generators": gens.to_list(), "p": p, **extra}


def power_sum(req: PowerSumRequest, apery: PAperySet | None = None) -> int:
    """Return sum of n^mu over n >= 0 with d(n) <= p.

    mu = 0 is the cardinality of the complement and is routed to genus().

    Raises:
        ConsistencyError: If the closed form does not evaluate to an integer
    """
    gens, p, mu = req.gens, req.p, req.mu
    ap = resolve_apery(gens, p, apery)
    if mu == 0:
        return genus(gens, p, apery=ap)

    a = gens.a1
    m = ap.m
    total = Fraction(0)
    for kappa in range(mu + 1):
        b = bernoulli(kappa)
        if not b:
            continue
        moment = sum(mi ** (mu + 1 - kappa) for mi in m)
        total += comb(mu + 1, kappa) * b * Fraction(a) ** (kappa - 1) * moment
    total /= mu + 1
    total += bernoulli(mu + 1) / (mu + 1) * (a ** (mu + 1) - 1)
    return require_integer(total, f"power sum s_{p}^({mu})", _context(gens, p, mu=mu))


def frobenius(gens: Generators, p: int, apery: PAperySet | None = None) -> int:
    """The p-Frobenius number: max_i m_i^{(p)} - a_1.

    Returns -1 when the complement is empty (p = 0 with a generator 1).
    """
    ap = resolve_apery(gens, p, apery)
    return ap.max() - gens.a1


def genus(gens: Generators, p: int, apery: PAperySet | None = None, count_zero: bool = True) -> int:
    """The p-genus: (1/a_1) sum_i m_i^{(p)} - (a_1 - 1)/2.

    This counts every n >= 0 with d(n) <= p, including 0 once p >= 1
    (d(0) = 1). With count_zero=False only positive members are counted.
    """
    ap = resolve_apery(gens, p, apery)
    a = gens.a1
    value = require_integer(
        Fraction(sum(ap.m), a) - Fraction(a - 1, 2), f"p-genus n_{p}", _context(gens, p)
    )
    if not count_zero and p >= 1:
        value -= 1
    return value


def sylvester_sum(gens: Generators, p: int, apery: PAperySet | None = None) -> int:
    """The p-Sylvester sum: (1/2a_1) sum m_i^2 - (1/2) sum m_i + (a_1^2 - 1)/12."""
    ap = resolve_apery(gens, p, apery)
    a = gens.a1
    value = (
        Fraction(sum(mi * mi for mi in ap.m), 2 * a)
        - Fraction(sum(ap.m), 2)
        + Fraction(a * a - 1, 12)
    )
    return require_integer(value, f"p-Sylvester sum s_{p}", _context(gens, p))
