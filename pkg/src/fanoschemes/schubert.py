"""Schubert-class decomposition and Plücker degree of Fano schemes."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .combinatorics import schubert_degree, trim
from .invariants import FanoProblem, delta
from .polyengine import alternant_coefficient, build_Q, mul_e_power

log = logging.getLogger(__name__)


class Straightened(NamedTuple):
    sign: int
    parts: tuple


def straighten(alpha) -> Optional[Straightened]:
    """Rewrite sigma_alpha as sign * sigma_lambda, or return None when it vanishes.

    alpha + kappa = tau(lambda + kappa) with kappa = (r, ..., 1, 0); the sign is
    that of tau.
    """
    alpha = tuple(alpha)
    k = len(alpha)
    shifted = [a + (k - 1 - i) for i, a in enumerate(alpha)]
    if len(set(shifted)) < k:
        return None
    # sort decreasingly by insertion, counting transpositions
    sign = 1
    arr = list(shifted)
    for i in range(1, k):
        j = i
        while j > 0 and arr[j - 1] < arr[j]:
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            sign = -sign
            j -= 1
    lam = tuple(x - (k - 1 - i) for i, x in enumerate(arr))
    if any(x < 0 for x in lam):
        return None
    return Straightened(sign, lam)


@dataclass
class FanoClass:
    """[F_r(X)] = sum f_lambda sigma_lambda. ``n`` is None for the untruncated class."""

    r: int
    n: Optional[int]
    coefficients: dict = field(default_factory=dict)

    def terms(self) -> list:
        """(partition, coefficient) pairs, largest partition first."""
        return sorted(self.coefficients.items(), reverse=True)

    def render(self) -> str:
        if not self.coefficients:
            return "0"
        return " + ".join(
            f"{c} s[{','.join(map(str, trim(lam)))}]" for lam, c in self.terms()
        )


def _class_from_Q(r, d, n) -> FanoClass:
    # An exponent above n forces lambda_0 > n - r, so capping at n loses nothing.
    Q = build_Q(r, d, caps=n)
    acc: dict = {}
    for alpha, q in Q.terms.items():
        st = straighten(alpha)
        if st is None:
            continue
        if n is not None and st.parts[0] > n - r:
            continue
        acc[st.parts] = acc.get(st.parts, 0) + st.sign * q
    return FanoClass(r, n, {lam: c for lam, c in acc.items() if c})


def fano_class(problem: FanoProblem) -> FanoClass:
    """Decomposition of the top Chern class of Sym^d S* in G(r, P^n).

    Partitions that do not fit in the (r+1) x (n-r) rectangle are dropped.
    """
    if delta(problem) < 0:
        log.warning(
            "delta = %d < 0 for n=%d d=(%s) r=%d: this is the top Chern class of "
            "Sym^d S*, not the class of a scheme of expected dimension",
            delta(problem), problem.n, problem.d, problem.r,
        )
    return _class_from_Q(problem.r, problem.d, problem.n)


def abstract_class(r: int, d) -> FanoClass:
    """The class without rectangle truncation, i.e. for n large."""
    if r < 0:
        raise ValueError("r must be >= 0")
    return _class_from_Q(r, d, None)


def _require_nonneg_delta(problem):
    dl = delta(problem)
    if dl < 0:
        raise ValueError(f"delta = {dl} < 0: F_r(X) is generically empty, no degree")
    return dl


def fano_degree(problem: FanoProblem) -> int:
    """Plücker degree of F_r(X): coefficient of x_0^n ... x_r^{n-r} in Q e^delta V."""
    dl = _require_nonneg_delta(problem)
    n, r = problem.n, problem.r
    p = mul_e_power(build_Q(r, problem.d, caps=n), dl)
    return alternant_coefficient(p, tuple(n - i for i in range(r + 1)))


def fano_degree_via_pieri(problem: FanoProblem) -> int:
    """Same degree, as sum_lambda f_lambda * deg(sigma_lambda sigma_1^delta)."""
    _require_nonneg_delta(problem)
    cls = fano_class(problem)
    return sum(c * schubert_degree(lam, problem.n) for lam, c in cls.coefficients.items())
