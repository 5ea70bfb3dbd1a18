"""p-Apery sets.

For each residue i modulo a_1, m_i^{(p)} is the smallest n = i (mod a_1)
with d(n) >= p + 1. Because d(n + a_1) >= d(n), this is the same as the
three defining conditions: m_i = i (mod a_1), d(m_i) > p and
d(m_i - a_1) <= p.
"""

import logging
from dataclasses import dataclass

from .denumerant import DenumerantTable, denumerant_table
from ..core.errors import DomainError
from .generators import Generators

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PAperySet:
    """The p-Apery set of gens with respect to a_1.

    Attributes:
        gens: The generators
        p: Representation threshold
        m: m[i] = m_i^{(p)}, indexed by residue class modulo a_1
    """
    gens: Generators
    p: int
    m: tuple[int, ...]

    @property
    def a1(self) -> int:
        return self.gens.a1

    def __iter__(self):
        return iter(self.m)

    def __len__(self) -> int:
        return len(self.m)

    def __getitem__(self, i: int) -> int:
        return self.m[i]

    def max(self) -> int:
        return max(self.m)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.m)

    def violations(self, table: DenumerantTable | None = None) -> list[str]:
        """Re-check the three defining conditions, returning any failures."""
        if table is None or table.bound < self.max():
            table = denumerant_table(self.gens, self.max())
        problems = []
        a1 = self.a1
        if len(self.m) != a1:
            problems.append(f"expected {a1} elements, got {len(self.m)}")
        for i, mi in enumerate(self.m):
            if mi % a1 != i % a1:
                problems.append(f"m_{i} = {mi} is not congruent to {i} mod {a1}")
            if table[mi] <= self.p:
                problems.append(f"d(m_{i}) = {table[mi]} <= p = {self.p}")
            if table[mi - a1] > self.p:
                problems.append(f"d(m_{i} - a_1) = {table[mi - a1]} > p = {self.p}")
        return problems


def initial_scan_bound(gens: Generators, p: int, extra_factor: int = 1) -> int:
    """(p + 1) a_1 a_2 + extra_factor * a_1 a_2: g_p(a, b) + a for a coprime pair bounds max m_i."""
    a1, a2 = gens[0], gens[1]
    return (p + 1) * a1 * a2 + extra_factor * a1 * a2


def apery_set(
    gens: Generators,
    p: int,
    *,
    extra_factor: int = 1,
    growth_factor: int = 2,
) -> PAperySet:
    """Compute the p-Apery set of gens.

    Scans n = 0, 1, 2, ... against a denumerant table, recording the first
    n in each residue class with d(n) > p. The table starts at
    initial_scan_bound() and grows by growth_factor until every residue
    class has been hit (termination is guaranteed since gcd = 1).

    Args:
        gens: Validated generators
        p: Non-negative representation threshold
        extra_factor: Multiplier of the a_1 a_2 slack in the initial bound
        growth_factor: Factor applied to the bound when it is too small

    Returns:
        PAperySet with m ordered by residue
    """
    if p < 0:
        raise DomainError(f"p must be non-negative, got {p}")
    a1 = gens.a1
    bound = initial_scan_bound(gens, p, extra_factor)
    while True:
        table = denumerant_table(gens, bound)
        m: list[int | None] = [None] * a1
        missing = a1
        for n, count in enumerate(table.counts):
            if count > p and m[n % a1] is None:
                m[n % a1] = n
                missing -= 1
                if not missing:
                    break
        if not missing:
            logger.debug(f"Apery set of {gens.values} at p={p} found with table bound {bound}")
            return PAperySet(gens=gens, p=p, m=tuple(m))
        logger.debug(f"Apery scan bound {bound} too small for {gens.values} at p={p}, {missing} residues left")
        bound *= max(growth_factor, 2)
