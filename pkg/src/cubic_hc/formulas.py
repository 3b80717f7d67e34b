"""
Closed Forms - Exact Hamilton-cycle counts for P(m,2), rings of ladders and N(5,k).
"""

import logging
from typing import List

from .exceptions import BadParametersError

logger = logging.getLogger(__name__)


class FibCache:
    """Memoized Fibonacci numbers with F_1 = F_2 = 1."""

    def __init__(self) -> None:
        self._values: List[int] = [0, 1, 1]

    def __call__(self, n: int) -> int:
        if n < 0:
            raise BadParametersError(f"Fibonacci index must be >= 0, got {n}")
        while len(self._values) <= n:
            self._values.append(self._values[-1] + self._values[-2])
        return self._values[n]


fib = FibCache()


def schwenk_count(m: int) -> int:
    """Hamilton cycles of P(m, 2) for even m >= 10."""
    if m < 10 or m % 2:
        raise BadParametersError(f"Schwenk's count needs even m >= 10, got m={m}")
    half = m // 2
    count = 2 * (fib(half + 1) + fib(half - 1) - 1)
    if m % 6 == 4:
        count += m
    return count


def rl_count(m: int, k: int) -> int:
    """Hamilton cycles of the ring of ladders RL(m, k)."""
    if m < 2 or k < 2:
        raise BadParametersError(f"RL(m,k) needs m >= 2 and k >= 2, got m={m}, k={k}")
    if k % 2:
        return 2**m + m * (k - 1) ** (m - 1)
    return 2 + m * k * (k - 1) ** (m - 2)


def n5_count(k: int) -> int:
    """Hamilton cycles of the width-5 nanotube N(5, k)."""
    if k < 1:
        raise BadParametersError(f"N(5,k) needs k >= 1, got k={k}")
    count = 5 * 2**k
    if k % 2:
        count += 20 * 12 ** ((k - 1) // 2)
    return count
