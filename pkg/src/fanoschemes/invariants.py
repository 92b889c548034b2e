"""Closed-form invariants of Fano schemes F_r(X) and the bound-based predicates.

Every predicate here reports whether a sufficient numerical condition holds.
``holds=False`` means the bound is not met, not that the property fails:
lines on a complex cubic fourfold form a simply connected variety even
though n = 5 is below the simple-connectedness bound.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .combinatorics import MultiDegree, binom_sum, partitions_in_rectangle


@dataclass(frozen=True)
class FanoProblem:
    """r-planes on a complete intersection of multidegree ``d`` in P^n."""

    n: int
    d: MultiDegree
    r: int

    def __post_init__(self):
        object.__setattr__(self, "d", MultiDegree.of(self.d))
        if not 0 <= self.r < self.n:
            raise ValueError(f"need 0 <= r < n, got r={self.r}, n={self.n}")

    @property
    def s(self) -> int:
        return self.d.s

    def codim(self) -> int:
        """Rank of Sym^d S*, i.e. sum_i C(d_i + r, r)."""
        return binom_sum(self.d, self.r, self.r)

    def is_quadric(self) -> bool:
        return self.d.degrees == (2,)


class Classification(str, enum.Enum):
    GENERICALLY_EMPTY = "GenericallyEmpty"
    SMOOTH_EXPECTED_DIM = "NonemptySmoothOfExpectedDim"
    SMOOTH_CONNECTED = "NonemptySmoothConnected"
    QUADRIC_TWO_COMPONENTS = "QuadricTwoComponents"


def delta(p: FanoProblem) -> int:
    """Expected dimension (r+1)(n-r) - sum_i C(d_i + r, r)."""
    return (p.r + 1) * (p.n - p.r) - p.codim()


def delta_minus(p: FanoProblem) -> int:
    return min(delta(p), p.n - 2 * p.r - p.s)


def _check_r0(p: FanoProblem, r0: int):
    if not -1 <= r0 < p.r:
        raise ValueError(f"need -1 <= r0 < r, got r0={r0}, r={p.r}")


def delta_rel(p: FanoProblem, r0: int) -> int:
    """Expected dimension of the r-planes in X through a fixed r0-plane."""
    _check_r0(p, r0)
    return (p.r - r0) * (p.n - p.r) + binom_sum(p.d, r0, r0) - p.codim()


def delta_minus_rel(p: FanoProblem, r0: int) -> int:
    _check_r0(p, r0)
    other = p.n - 2 * p.r + r0 + 1 - binom_sum(p.d, r0, r0 + 1)
    return min(delta_rel(p, r0), other)


def classify(p: FanoProblem) -> Classification:
    if p.is_quadric() and p.n == 2 * p.r + 1:
        return Classification.QUADRIC_TWO_COMPONENTS
    dm = delta_minus(p)
    if dm < 0:
        return Classification.GENERICALLY_EMPTY
    if dm == 0:
        return Classification.SMOOTH_EXPECTED_DIM
    return Classification.SMOOTH_CONNECTED


def canonical_twist(p: FanoProblem) -> int:
    """The integer t with K_{F_r(X)} = O(t)."""
    return binom_sum(p.d, p.r, p.r + 1) - p.n - 1


def fano_index(p: FanoProblem) -> int:
    return -canonical_twist(p)


def is_fano(p: FanoProblem) -> bool:
    return fano_index(p) >= 1


@dataclass(frozen=True)
class HodgeAnswer:
    """A Betti/Hodge number answer: ``kind`` is "exact", "lower_bound" or "unknown"."""

    kind: str
    value: Optional[int] = None


def hodge_number(p: FanoProblem, i: int) -> HodgeAnswer:
    """b_i of F_r(X) as far as the Lefschetz-type comparison with G(r, P^n) reaches.

    Below delta_minus the restriction map is an isomorphism, so b_i equals the
    Grassmannian's (h^{q,q} counts partitions of q in the (r+1)x(n-r) box and
    odd Betti numbers vanish). At delta_minus it is only injective.
    """
    if i < 0:
        raise ValueError("i must be >= 0")
    dm = delta_minus(p)
    if i > dm:
        return HodgeAnswer("unknown")
    value = 0 if i % 2 else partitions_in_rectangle(i // 2, p.r + 1, p.n - p.r)
    return HodgeAnswer("exact" if i < dm else "lower_bound", value)


def splitting_type(p: FanoProblem) -> tuple:
    """(a, b) with the normal bundle of a general line in Lambda* being O^a + O(1)^b."""
    upper = binom_sum(p.d, p.r, p.r + 1)
    if p.n < upper + p.r + 1:
        raise ValueError(f"splitting type needs n >= {upper + p.r + 1}, got n={p.n}")
    count_o = p.r * (p.n - p.r - 1) + upper - p.codim()
    count_o1 = p.n - p.r - 1 - upper
    return count_o, count_o1


@dataclass(frozen=True)
class Predicate:
    """Outcome of one sufficient condition.

    ``bound`` is the threshold that ``compared`` ("n" or "delta_minus") was
    checked against; ``value`` carries an extra number for predicates that
    return one.
    """

    holds: bool
    bound: int
    compared: str = "n"
    value: Optional[int] = None


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _at_least(n: int, bound: int, value=None) -> Predicate:
    return Predicate(n >= bound, bound, "n", value)


def predicate_suite(p: FanoProblem) -> dict:
    n, r, s = p.n, p.r, p.s
    c_r = p.codim()                                  # sum C(d_i + r, r)
    c_r1 = binom_sum(p.d, r, r + 1)                  # sum C(d_i + r, r + 1)
    c_r2 = binom_sum(p.d, r + 1, r + 2)              # sum C(d_i + r + 1, r + 2)
    dm = delta_minus(p)
    lines_bound = c_r1 + r + 1

    out = {}
    # n >= 2 c_r / (r+1) + r + 1, as (r+1)(n-r-1) >= 2 c_r
    out["simply_connected"] = Predicate(
        (r + 1) * (n - r - 1) >= 2 * c_r, _ceil_div(2 * c_r, r + 1) + r + 1
    )
    out["picard_Z_homotopy"] = _at_least(n, 2 * c_r + 2)
    out["picard_rank_one"] = Predicate(dm >= 3, 3, "delta_minus")
    out["projectively_normal"] = _at_least(n, r + c_r, min(p.d))
    if p.is_quadric():
        out["covered_by_r_planes"] = _at_least(n, 2 * r + 1)
    elif r == 0:
        # r n >= C(d, 0) - s = 0 holds for every n
        out["covered_by_r_planes"] = Predicate(True, 0)
    else:
        # n >= (c_r + r^2 - s) / r, as r n >= c_r + r^2 - s
        out["covered_by_r_planes"] = Predicate(
            r * n >= c_r + r * r - s, _ceil_div(c_r + r * r - s, r)
        )
    out["uniruled_in_lines"] = _at_least(n, lines_bound)
    out["separably_uniruled"] = _at_least(n, lines_bound)
    out["rationally_chain_connected"] = _at_least(n, c_r1)
    chain = _at_least(n, lines_bound)
    out["chain_degree"] = Predicate(chain.holds, chain.bound, "n", delta(p) if chain.holds else None)
    out["B1_rank_one"] = _at_least(n, lines_bound)
    out["A1_rank_one"] = _at_least(n, c_r2)
    return out


@dataclass
class InvariantReport:
    problem: FanoProblem
    delta: int
    delta_minus: int
    classification: Classification
    canonical_twist: int
    fano_index: int
    is_fano: bool
    predicates: dict = field(default_factory=dict)


def report(p: FanoProblem) -> InvariantReport:
    return InvariantReport(
        problem=p,
        delta=delta(p),
        delta_minus=delta_minus(p),
        classification=classify(p),
        canonical_twist=canonical_twist(p),
        fano_index=fano_index(p),
        is_fano=is_fano(p),
        predicates=predicate_suite(p),
    )

