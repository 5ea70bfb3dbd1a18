"""Eulerian numbers <n over m> and the sums built from them.

<n over m> counts permutations of n letters with m descents. Rows are
computed from the explicit alternating sum

    <n over m> = sum_{k=0}^{m} (-1)^k C(n+1, k) (m-k+1)^n

with <0 over 0> = 1, and cached per row.
"""

import logging
import threading
from fractions import Fraction
from math import comb
from typing import Any

from ..core.errors import DomainError

logger = logging.getLogger(__name__)


def _explicit(n: int, m: int) -> int:
    return sum((-1) ** k * comb(n + 1, k) * (m - k + 1) ** n for k in range(m + 1))


class EulerianCache:
    """Triangle of Eulerian numbers, rows[n][m] for 0 <= m <= max(n-1, 0).

    Example:
        cache = EulerianCache()
        cache.row(3)  # (1, 4, 1)
    """

    def __init__(self):
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self._rows)

    def row(self, n: int) -> tuple[int, ...]:
        """Return row n of the triangle."""
        if n < 0:
            raise DomainError(f"Eulerian row index must be non-negative, got {n}")
        rows = self._rows
        if n < len(rows):
            return rows[n]
        self.extend(n)
        return self._rows[n]

    def extend(self, n: int) -> None:
        with self._lock:
            start = len(self._rows)
            for k in range(start, n + 1):
                self._rows.append(tuple(_explicit(k, m) for m in range(k)))
            if n >= start:
                logger.debug(f"Eulerian cache extended to row {n}")


_cache = EulerianCache()


def eulerian(n: int, m: int) -> int:
    """Return <n over m>.

    Raises:
        DomainError: If n < 0 or m lies outside 0..max(n-1, 0)
    """
    if n < 0 or m < 0 or m > max(n - 1, 0):
        raise DomainError(f"Eulerian index out of range: <{n} over {m}>")
    return _cache.row(n)[m]


def eulerian_cache() -> EulerianCache:
    return _cache


def eulerian_polynomial(n: int, x: Any) -> Any:
    """Evaluate sum_j <n over n-j> x^j over the valid index range.

    For n = 0 this is the single term <0 over 0> = 1; for n >= 1 the index
    j runs over 1..n (the j = 0 term <n over n> vanishes). x may be any
    ring value supporting + and * with ints (int, Fraction,
    NumberFieldElement).
    """
    row = _cache.row(n)
    if n == 0:
        return x ** 0
    total = None
    power = x
    for j in range(1, n + 1):
        term = power * row[n - j]
        total = term if total is None else total + term
        if j < n:
            power = power * x
    return total


def power_series_partial_sum(n: int, x: Fraction, terms: int) -> Fraction:
    """Return sum_{k=0}^{terms} k^n x^k with 0^0 = 1."""
    return sum((Fraction(k ** n) * x ** k for k in range(terms + 1)), Fraction(0))


def eulerian_closed_form(n: int, x: Fraction) -> Fraction:
    """Closed form of sum_{k>=0} k^n x^k for |x| < 1.

    For n >= 1 this is (1/(1-x)^{n+1}) sum_m <n over m> x^{m+1}; for n = 0
    (0^0 = 1) it is the geometric series 1/(1-x).
    """
    x = Fraction(x)
    if n == 0:
        return 1 / (1 - x)
    row = _cache.row(n)
    numerator = sum((row[m] * x ** (m + 1) for m in range(n)), Fraction(0))
    return numerator / (1 - x) ** (n + 1)
