"""Denumerants d(n; a_1, ..., a_k): the number of representations of n.

d(n) counts the tuples (x_1, ..., x_k) >= 0 with sum x_i a_i = n. The table
is filled by the coin-counting dynamic program, one pass per generator.
"""

import logging
from dataclasses import dataclass

from ..core.errors import DomainError
from .generators import Generators

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DenumerantTable:
    """Representation counts for 0 <= n <= bound.

    Attributes:
        gens: The generators
        bound: Largest n in the table
        counts: counts[n] = d(n)
    """
    gens: Generators
    bound: int
    counts: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        """d(n), with d(n) = 0 for negative n."""
        if n < 0:
            return 0
        if n > self.bound:
            raise IndexError(f"n = {n} beyond table bound {self.bound}")
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)

    def in_Sp(self, n: int, p: int) -> bool:
        return n >= 0 and self[n] > p

    def rows(self) -> list[tuple[int, int]]:
        """(n, d(n)) pairs in ascending n."""
        return list(enumerate(self.counts))


def denumerant_table(gens: Generators, bound: int) -> DenumerantTable:
    """Compute d(0..bound) in O(k * bound) additions."""
    if bound < 0:
        raise DomainError(f"bound must be non-negative, got {bound}")
    counts = [0] * (bound + 1)
    counts[0] = 1
    for a in gens:
        for n in range(a, bound + 1):
            counts[n] += counts[n - a]
    return DenumerantTable(gens=gens, bound=bound, counts=tuple(counts))


def denumerant(n: int, gens: Generators) -> int:
    """Return d(n); 0 for negative n."""
    if n < 0:
        return 0
    return denumerant_table(gens, n).counts[n]


def denumerant_series(gens: Generators, bound: int) -> list[int]:
    """Coefficients of prod_i 1/(1 - z^{a_i}) truncated at z^bound.

    Multiplies the truncated geometric series of each generator, the
    generating function of d(n).
    """
    series = [1] + [0] * bound
    for a in gens:
        geometric = [1 if n % a == 0 else 0 for n in range(bound + 1)]
        product = [0] * (bound + 1)
        for i, x in enumerate(series):
            if x:
                for j in range(0, bound + 1 - i, a):
                    product[i + j] += x * geometric[j]
        series = product
    return series


def is_in_Sp(n: int, gens: Generators, p: int) -> bool:
    """True iff n >= 0 has more than p representations."""
    return n >= 0 and denumerant(n, gens) > p
