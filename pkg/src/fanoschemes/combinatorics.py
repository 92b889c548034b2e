"""Exact integer combinatorics used throughout the package.

Everything here returns Python ints, so there is no overflow to worry about.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

Partition = tuple  # weakly decreasing tuple of nonnegative ints, fixed length


@dataclass(frozen=True, eq=False)
class MultiDegree:
    """Degrees (d_1, ..., d_s) of the equations cutting out a complete intersection.

    Entries keep the order they were given in, but two multidegrees compare
    equal when they agree up to permutation.
    """

    degrees: tuple

    def __post_init__(self):
        degs = tuple(int(x) for x in self.degrees)
        if not degs:
            raise ValueError("a multidegree needs at least one entry")
        if any(x < 1 for x in degs):
            raise ValueError(f"degrees must be >= 1, got {degs}")
        object.__setattr__(self, "degrees", degs)

    @classmethod
    def of(cls, d) -> "MultiDegree":
        if isinstance(d, MultiDegree):
            return d
        if isinstance(d, int):
            return cls((d,))
        return cls(tuple(d))

    @property
    def s(self) -> int:
        return len(self.degrees)

    def sorted(self) -> tuple:
        return tuple(sorted(self.degrees))

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def __eq__(self, other):
        if not isinstance(other, MultiDegree):
            return NotImplemented
        return self.sorted() == other.sorted()

    def __hash__(self):
        return hash(self.sorted())

    def __str__(self):
        return ",".join(map(str, self.degrees))


def binom(m: int, k: int) -> int:
    """Binomial coefficient with the conventions C(m, 0) = 1 and C(m, k) = 0 for k < 0.

    >>> binom(41, 39)
    820
    >>> binom(3, -1)
    0
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    if m < 0:
        raise ValueError(f"binom({m}, {k}) is undefined for negative m and k >= 1")
    return math.comb(m, k)


def binom_sum(d, shift: int, lower: int) -> int:
    """Sum over the entries of ``d`` of C(d_i + shift, lower)."""
    return sum(binom(di + shift, lower) for di in MultiDegree.of(d))


def multi_indices(r: int, deg: int) -> list:
    """All (a_0, ..., a_r) >= 0 with sum ``deg``, in lexicographic order."""
    if r < 0 or deg < 0:
        return []
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for a in range(remaining + 1):
            rec(prefix + (a,), remaining - a, slots - 1)

    rec((), deg, r + 1)
    return out


@lru_cache(maxsize=None)
def partitions_in_rectangle(p: int, rows: int, cols: int) -> int:
    """Number of partitions of ``p`` with at most ``rows`` parts, each at most ``cols``."""
    if p == 0:
        return 1
    if p < 0 or rows <= 0 or cols <= 0 or p > rows * cols:
        return 0
    # either no part equals cols, or peel one off a full-width row
    return partitions_in_rectangle(p, rows, cols - 1) + partitions_in_rectangle(p - cols, rows - 1, cols)


def is_partition(parts: Sequence[int]) -> bool:
    return all(x >= 0 for x in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def fits_rectangle(parts: Sequence[int], rows: int, cols: int) -> bool:
    return len(parts) <= rows and is_partition(parts) and (not parts or parts[0] <= cols)


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given in one-line notation, by counting inversions."""
    inv = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def signed_permutations(k: int) -> list:
    """All permutations of range(k) paired with their sign."""
    return [(perm, permutation_sign(perm)) for perm in itertools.permutations(range(k))]


def schubert_degree(lam: Sequence[int], n: int) -> int:
    """Integral of sigma_lam * sigma_1^delta over G(r, P^n), with r = len(lam) - 1.

    Counts chains of partitions from ``lam`` to the full (r+1) x (n-r)
    rectangle growing by one box at a time, i.e. iterated Pieri with sigma_1.
    """
    lam = tuple(lam)
    r = len(lam) - 1
    cols = n - r
    if r < 0 or cols < 1:
        raise ValueError(f"need 0 <= r < n, got r={r}, n={n}")
    if not fits_rectangle(lam, r + 1, cols):
        raise ValueError(f"{lam} does not fit the {r + 1}x{cols} rectangle")
    return _chains_to_full(lam, cols)


@lru_cache(maxsize=None)
def _chains_to_full(lam: tuple, cols: int) -> int:
    if all(x == cols for x in lam):
        return 1
    total = 0
    for i, x in enumerate(lam):
        if x < cols and (i == 0 or lam[i - 1] > x):
            total += _chains_to_full(lam[:i] + (x + 1,) + lam[i + 1:], cols)
    return total


def trim(parts: Iterable[int]) -> tuple:
    """Drop trailing zeros: (3, 1, 0) -> (3, 1)."""
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)
