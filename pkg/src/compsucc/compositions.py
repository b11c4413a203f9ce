"""Integer compositions and adjacent-part congruence statistics.

A composition of n is an ordered tuple of positive parts summing to n.  For
a modulus m and a shift r, an adjacent pair (u, v) counts as a *succession*
when v = u + r (mod m).  The case m = 2, r = 0 counts pairs of equal parity;
r = 0 with m larger than every part degenerates to counting equal adjacent
parts (the Carlitz restriction).

Everything in this module is exact integer combinatorics.  The table built
by `brute_force_table` enumerates compositions outright and serves as the
ground-truth oracle against which the generating-function and closed-form
modules are tested.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator


class BudgetError(ValueError):
    """Raised when an exhaustive enumeration would exceed its configured budget."""


#: default cap for exhaustive enumeration (2^(n-1) compositions of n)
DEFAULT_BUDGET = 22


def residue_bar(t: int, m: int) -> int:
    """Representative of t in {1, ..., m}: multiples of m map to m, not 0."""
    if t < 1 or m < 1:
        raise ValueError(f"residue_bar requires t >= 1 and m >= 1, got t={t}, m={m}")
    return (t - 1) % m + 1


@dataclass(frozen=True, slots=True)
class Composition:
    """Ordered tuple of positive integer parts; the empty composition is allowed."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive integers, got {self.parts!r}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def d(self) -> int:
        return len(self.parts)


@dataclass(frozen=True, slots=True)
class SuccessionParams:
    """The pair (m, r) defining the succession statistic, with s = gcd(m, r)
    and p = m/s derived.  gcd(m, 0) = m, so r = 0 gives s = m and p = 1."""

    m: int
    r: int = 0

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"modulus must be >= 1, got {self.m}")
        if not 0 <= self.r <= self.m - 1:
            raise ValueError(f"shift must satisfy 0 <= r <= m-1, got r={self.r}, m={self.m}")

    @property
    def s(self) -> int:
        return math.gcd(self.m, self.r)

    @property
    def p(self) -> int:
        return self.m // self.s


def succession_count(pi: Composition, params: SuccessionParams) -> int:
    """Number of indices i with parts[i+1] = parts[i] + r (mod m)."""
    parts = pi.parts
    m, r = params.m, params.r
    return sum(1 for u, v in zip(parts, parts[1:]) if (v - u - r) % m == 0)


def _part_tuples(n: int, d: int | None) -> Iterator[tuple[int, ...]]:
    # ascending first part + recursion yields lexicographic order of part tuples
    if n == 0:
        if d is None or d == 0:
            yield ()
        return
    if d is None:
        for first in range(1, n):
            for rest in _part_tuples(n - first, None):
                yield (first, *rest)
        yield (n,)
    elif d == 1:
        yield (n,)
    elif d >= 2:
        for first in range(1, n - d + 2):
            for rest in _part_tuples(n - first, d - 1):
                yield (first, *rest)


def enumerate_compositions(n: int, d: int | None = None) -> Iterator[Composition]:
    """Yield the compositions of n (optionally with exactly d parts) in
    lexicographic order of their part tuples.

    There are binomial(n-1, d-1) compositions with d parts and 2^(n-1) in
    total for n >= 1; n = 0 yields the single empty composition.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if d is not None and not 0 <= d <= n:
        raise ValueError(f"d must satisfy 0 <= d <= n, got d={d}, n={n}")
    for parts in _part_tuples(n, d):
        yield Composition(parts)


def is_carlitz(pi: Composition) -> bool:
    """True iff no two adjacent parts are equal."""
    parts = pi.parts
    return all(u != v for u, v in zip(parts, parts[1:]))


def carlitz_count(n: int, *, budget: int = DEFAULT_BUDGET) -> int:
    """Number of compositions of n with no two equal adjacent parts.

    Exhaustive; cost 2^(n-1), guarded by the enumeration budget.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > budget:
        raise BudgetError(f"carlitz_count(n={n}) exceeds enumeration budget {budget}")
    return sum(1 for pi in enumerate_compositions(n) if is_carlitz(pi))


@dataclass(frozen=True)
class CountTable:
    """Exact counts c(n, d, a) of compositions of n with d parts and a
    successions, for all n <= n_max.

    Lookups with any negative index read as 0 (the convention the count
    recurrences rely on); n beyond the table's coverage is an error.
    """

    params: SuccessionParams
    n_max: int
    entries: dict[tuple[int, int, int], int]

    def count(self, n: int, d: int, a: int) -> int:
        if n < 0 or d < 0 or a < 0:
            return 0
        if n > self.n_max:
            raise ValueError(f"table covers n <= {self.n_max}, asked for n={n}")
        return self.entries.get((n, d, a), 0)

    def cells(self) -> list[tuple[int, int, int]]:
        """Nonzero cells in sorted order."""
        return sorted(self.entries)


def brute_force_table(
    n_max: int, params: SuccessionParams, *, budget: int = DEFAULT_BUDGET
) -> CountTable:
    """Build the count table by enumerating every composition of every n <= n_max.

    This is the oracle: no generating function or closed form is involved.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if n_max > budget:
        raise BudgetError(f"brute_force_table(n_max={n_max}) exceeds enumeration budget {budget}")
    m, r = params.m, params.r
    entries: dict[tuple[int, int, int], int] = {}
    for n in range(n_max + 1):
        for parts in _part_tuples(n, None):
            a = sum(1 for u, v in zip(parts, parts[1:]) if (v - u - r) % m == 0)
            key = (n, len(parts), a)
            entries[key] = entries.get(key, 0) + 1
    return CountTable(params=params, n_max=n_max, entries=entries)
