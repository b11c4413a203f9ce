"""Closed-form counts and recurrences for the parity statistic (m = 2, r = 0).

c(n, d, a) below always refers to the number of compositions of n with d
parts and a parity successions.  The closed forms count the a = 0 slice
(parity-alternating compositions); `count_recurrence_holds` checks the
eight-term recurrence satisfied by the full table.  All arithmetic is exact.
"""

from __future__ import annotations

import math

from .compositions import CountTable


def binom(x: int, k: int) -> int:
    """binomial(x, k), extended to 0 whenever x < 0, k < 0 or k > x."""
    if k < 0 or x < 0 or k > x:
        return 0
    return math.comb(x, k)


def alternating_even_parts(n: int, d: int) -> int:
    """c(n, 2d, 0): parity-alternating compositions of n with an even number
    2d of parts.  Zero unless n and d share a parity."""
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    if (n - d) % 2 != 0:
        return 0
    return 2 * binom((n + d) // 2 - 1, 2 * d - 1)


def alternating_odd_parts(n: int, d: int) -> int:
    """c(n, 2d+1, 0): parity-alternating compositions of n with 2d+1 parts."""
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    if (n - d) % 2 == 0:
        return binom((n + d) // 2 - 1, 2 * d)
    return binom((n + d - 1) // 2, 2 * d)


_ALT_CACHE = [1, 1, 1, 3]


def alternating_count(n: int) -> int:
    """Total number of parity-alternating compositions of n.

    Satisfies f(n) = 2 f(n-2) + f(n-3) - f(n-4) with initial values
    1, 1, 1, 3; values are memoized.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    while len(_ALT_CACHE) <= n:
        k = len(_ALT_CACHE)
        _ALT_CACHE.append(2 * _ALT_CACHE[k - 2] + _ALT_CACHE[k - 3] - _ALT_CACHE[k - 4])
    return _ALT_CACHE[n]


def alternating_binomial_even(n: int) -> int:
    """Binomial-sum form of alternating_count(2n)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return sum(binom(n + d + 1, 4 * d) for d in range((n + 1) // 3 + 1))


def alternating_binomial_odd(n: int) -> int:
    """Binomial-sum form of alternating_count(2n+1)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return sum(binom(n + d + 2, 4 * d + 2) for d in range(n // 3 + 1))


def count_recurrence_holds(table: CountTable, n: int, d: int, a: int) -> bool:
    """Check the eight-term recurrence for c(n, d, a) at one cell.

    Requires n >= 4 and d >= 3; out-of-range lookups (negative indices) read
    as 0, and a table that does not cover n is rejected by the table itself.
    """
    if n < 4 or d < 3:
        raise ValueError(f"recurrence applies for n >= 4 and d >= 3, got n={n}, d={d}")
    c = table.count
    rhs = (
        c(n - 1, d - 1, a - 1)
        + 2 * c(n - 2, d, a)
        + c(n - 2, d - 1, a - 1)
        + c(n - 3, d - 2, a)
        - c(n - 3, d - 1, a - 1)
        - c(n - 3, d - 2, a - 2)
        - c(n - 4, d, a)
        - c(n - 4, d - 1, a - 1)
    )
    return c(n, d, a) == rhs
