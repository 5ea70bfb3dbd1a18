"""Bernoulli numbers with the B_1 = -1/2 convention.

Values come from the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0 with
B_0 = 1 and are memoized in a process-wide cache.
"""

import logging
import threading
from fractions import Fraction
from math import comb

from ..core.errors import DomainError

logger = logging.getLogger(__name__)


class BernoulliCache:
    """Append-only cache of B_0..B_n.

    Lookups of already computed entries never take the lock; extending the
    cache is serialized so concurrent callers cannot interleave appends.

    Example:
        cache = BernoulliCache()
        cache.get(12)  # Fraction(-691, 2730)
    """

    def __init__(self):
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    @property
    def values(self) -> tuple[Fraction, ...]:
        """Snapshot of the computed values, values[n] = B_n."""
        return tuple(self._values)

    def get(self, n: int) -> Fraction:
        """Return B_n, extending the cache if needed."""
        if n < 0:
            raise DomainError(f"Bernoulli index must be non-negative, got {n}")
        values = self._values
        if n < len(values):
            return values[n]
        self.extend(n)
        return self._values[n]

    def extend(self, n: int) -> None:
        """Compute all values up to and including B_n."""
        with self._lock:
            values = self._values
            start = len(values)
            for m in range(start, n + 1):
                if m >= 3 and m % 2 == 1:
                    values.append(Fraction(0))
                    continue
                total = sum(comb(m + 1, k) * values[k] for k in range(m))
                values.append(-total / (m + 1))
            if n >= start:
                logger.debug(f"Bernoulli cache extended to B_{n}")


_cache = BernoulliCache()


def bernoulli(n: int) -> Fraction:
    """Return the Bernoulli number B_n (B_1 = -1/2)."""
    return _cache.get(n)


def bernoulli_cache() -> BernoulliCache:
    """Return the shared cache (for warm-up and invariant checks)."""
    return _cache
