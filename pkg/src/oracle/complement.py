"""Brute-force enumeration of the complement of S_p and direct sums over it."""

import logging
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from ..exactmath import NumberFieldElement, as_element, nf_pow, zero
from ..semigroup import Generators, denumerant_table

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComplementSet:
    """All n >= 0 with d(n) <= p, ascending.

    Attributes:
        gens: The generators
        p: Representation threshold
        elements: Ascending members of N_0 minus S_p
    """
    gens: Generators
    p: int
    elements: tuple[int, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, n: object) -> bool:
        if not isinstance(n, int):
            return False
        i = bisect_left(self.elements, n)
        return i < len(self.elements) and self.elements[i] == n

    def positive(self) -> tuple[int, ...]:
        """Members other than 0."""
        return tuple(n for n in self.elements if n > 0)


def complement_set(gens: Generators, p: int, initial_bound: int = 64) -> ComplementSet:
    """Enumerate {n >= 0 : d(n) <= p}.

    Scans n = 0, 1, 2, ... and stops after a_1 consecutive n with d(n) > p:
    since d(n + a_1) >= d(n), no later n can have d(n) <= p. The denumerant
    table is doubled whenever the scan reaches its end.
    """
    a1 = gens.a1
    bound = max(initial_bound, 2 * a1)
    start = 0
    elements: list[int] = []
    run = 0
    while True:
        table = denumerant_table(gens, bound)
        for n in range(start, bound + 1):
            if table.counts[n] <= p:
                elements.append(n)
                run = 0
            else:
                run += 1
                if run == a1:
                    logger.debug(f"Complement of S_{p}{gens.values}: {len(elements)} members, scan stopped at {n}")
                    return ComplementSet(gens=gens, p=p, elements=tuple(elements))
        start = bound + 1
        bound *= 2


def brute_power_sum(cs: ComplementSet, mu: int) -> int:
    """sum n^mu over the complement (0^0 = 1, so mu = 0 gives the size)."""
    return sum(n ** mu for n in cs.elements)


def brute_weighted_sum(
    cs: ComplementSet,
    mu: int,
    lam: NumberFieldElement | int | Fraction,
) -> NumberFieldElement:
    """sum lambda^n n^mu over the complement, evaluated term by term."""
    lam = as_element(lam)
    total = zero(lam.modulus)
    power = nf_pow(lam, 0)
    previous = 0
    for n in cs.elements:
        power = power * nf_pow(lam, n - previous)
        previous = n
        c = n ** mu
        if c:
            total = total + power * c
    return total


def brute_frobenius(cs: ComplementSet) -> int:
    """Largest member, or -1 for an empty complement."""
    return cs.elements[-1] if cs.elements else -1


def brute_genus(cs: ComplementSet) -> int:
    return len(cs.elements)


def brute_sylvester_sum(cs: ComplementSet) -> int:
    return sum(cs.elements)


def brute_alternating_sum(cs: ComplementSet) -> int:
    return sum(-n if n % 2 else n for n in cs.elements)
