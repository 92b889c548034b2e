"""Predonzan / Paranjape-Srinivas unirationality bounds and their Fano-scheme version.

For a multidegree d the pair (n(d), r(d)) is defined by

* n(1) = r(1) = 0 (the original uses n(1) = 1; 0 suffices),
* n(d) = n(d') + 1 and r(d) = r(d') when d' is d with one entry 1 removed,
* r(d) = n(d - 1) and n(d) = r(d) + sum_i C(d_i + r(d) - 1, r(d)) otherwise.

A complete intersection of multidegree d in P^N, N >= n(d), containing a
suitable r(d)-plane is unirational.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Mapping, Optional

from .combinatorics import MultiDegree, binom


@dataclass(frozen=True)
class PSBound:
    input_d: MultiDegree
    r_of_d: int
    n_of_d: int
    overrides_used: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class FanoBound:
    """n(d, r): for n >= bound, F_r(X) of a generic X is unirational."""

    d: MultiDegree
    r: int
    D: MultiDegree
    r_D: int
    r1: int
    bound: int
    overrides_used: dict = field(default_factory=dict, compare=False)


def _normalize_overrides(overrides: Optional[Mapping]) -> frozenset:
    if not overrides:
        return frozenset()
    out = {}
    for key, value in overrides.items():
        if isinstance(key, str):
            key = tuple(int(x) for x in key.split(","))
        key = MultiDegree.of(key).sorted()
        value = int(value)
        if value < 0:
            raise ValueError(f"override r{key} = {value} must be >= 0")
        out[key] = value
    return frozenset(out.items())


def _n_from_r(key: tuple, r: int) -> int:
    return r + sum(binom(di + r - 1, r) for di in key)


@lru_cache(maxsize=None)
def _ps(key: tuple, overrides: frozenset) -> tuple:
    """(r, n, used overrides) for a sorted multidegree ``key``."""
    table = dict(overrides)
    if key in table:
        r = table[key]
        return r, _n_from_r(key, r), frozenset({(key, r)})
    if key == (1,):
        return 0, 0, frozenset()
    if key[0] == 1:
        r, n, used = _ps(key[1:], overrides)
        return r, n + 1, used
    _, r, used = _ps(tuple(x - 1 for x in key), overrides)
    return r, _n_from_r(key, r), used


def ps_pair(d, overrides: Optional[Mapping] = None) -> PSBound:
    """The pair (r(d), n(d)).

    ``overrides`` maps multidegrees to better known values of r; n is then
    recomputed from the supplied r.

    >>> b = ps_pair((3, 3, 3, 3))
    >>> b.r_of_d, b.n_of_d
    (19, 859)
    """
    d = MultiDegree.of(d)
    r, n, used = _ps(d.sorted(), _normalize_overrides(overrides))
    return PSBound(d, r, n, dict(sorted(used)))


def expanded_multidegree(d, r: int) -> MultiDegree:
    """Each d_i repeated C(d_i + r, r) times: the degrees of the equations
    cutting out the variety of r-planes spanned by r+1 points."""
    d = MultiDegree.of(d)
    return MultiDegree(tuple(di for di in d for _ in range(binom(di + r, r))))


def fano_unirationality_bound(d, r: Optional[int] = None, overrides: Optional[Mapping] = None) -> FanoBound:
    """Explicit n(d, r) above which F_r(X) is unirational for generic X.

    ``d`` may also be a FanoProblem, whose n is ignored.
    """
    if r is None:
        d, r = d.d, d.r
    d = MultiDegree.of(d)
    if r < 0:
        raise ValueError("r must be >= 0")
    if min(d) < 2:
        raise ValueError(
            "degree-1 entries are not supported: a linear equation just replaces "
            "P^n by P^(n-1), so drop it and lower n by one"
        )
    D = expanded_multidegree(d, r)
    ps = ps_pair(D, overrides)
    r1 = (ps.r_of_d + 1) * (r + 1) - 1
    bound = r1 + sum(binom(di + r1 - 1, r1) for di in d)
    return FanoBound(d, r, D, ps.r_of_d, r1, bound, ps.overrides_used)


_LINE = re.compile(r"^d=(\d+(?:,\d+)*)r=(\d+)$")


def parse_overrides(text: str) -> dict:
    """Parse lines ``d=3,3,3,3 r=13``; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = re.sub(r"\s+", "", raw.split("#", 1)[0])
        if not line:
            continue
        m = _LINE.match(line)
        if not m:
            raise ValueError(f"line {lineno}: expected 'd=<comma list> r=<integer>', got {raw.strip()!r}")
        try:
            key = MultiDegree(tuple(int(x) for x in m.group(1).split(","))).sorted()
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        out[key] = int(m.group(2))
    return out


def load_overrides(path) -> dict:
    return parse_overrides(Path(path).read_text())
