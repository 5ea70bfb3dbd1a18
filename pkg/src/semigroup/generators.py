"""Validated generator tuples (a_1, ..., a_k) with a_1 the minimum."""

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Any, Iterable

from ..core.errors import CoprimalityError, DomainError


@dataclass(frozen=True)
class Generators:
    """Sorted, distinct, coprime positive generators.

    Attributes:
        values: a_1 < a_2 < ... < a_k, k >= 2
    """
    values: tuple[int, ...]

    @property
    def a1(self) -> int:
        """The smallest generator, the modulus of the Apery set."""
        return self.values[0]

    @property
    def k(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> int:
        return self.values[index]

    def to_list(self) -> list[int]:
        return list(self.values)


def validate_generators(raw: Iterable[Any]) -> Generators:
    """Check and normalize raw generators.

    Raises:
        DomainError: Fewer than two values, a non-positive or non-integer
            value, or a duplicate
        CoprimalityError: gcd of the values is not 1
    """
    values = list(raw)
    if len(values) < 2:
        raise DomainError(f"need at least two generators, got {values}")
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise DomainError(f"generators must be integers, got {v!r}")
        if v <= 0:
            raise DomainError(f"generators must be positive, got {v}")
    if len(set(values)) != len(values):
        raise DomainError(f"duplicate generators in {values}", context={"generators": values})
    g = reduce(gcd, values)
    if g != 1:
        raise CoprimalityError(f"gcd{tuple(values)} = {g}, generators must be coprime",
                               context={"generators": values, "gcd": g})
    return Generators(tuple(sorted(values)))
