"""Slow reference implementations, for tests only.

Nothing here is used by the CLI or the production code paths. Each function
has a hard size guard so it cannot be mistaken for the fast route.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .combinatorics import MultiDegree
from .polyengine import MultiPoly


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _all_exponent_vectors(num_vars, deg):
    for combo in itertools.product(range(deg + 1), repeat=num_vars):
        if sum(combo) == deg:
            yield combo


def dense_expand(r: int, d, delta: int) -> MultiPoly:
    """Uncapped Q_{r,d} * e^delta by naive polynomial products."""
    d = MultiDegree.of(d)
    total = sum(math.comb(di + r, r) for di in d) + delta
    if r > 1 or r < 0 or delta < 0 or total > 24:
        raise ValueError(f"dense_expand guard: need 0 <= r <= 1 and total degree <= 24, got r={r}, total={total}")
    k = r + 1
    unit = tuple(tuple(int(i == j) for i in range(k)) for j in range(k))
    poly = {(0,) * k: 1}
    for di in d:
        for a in _all_exponent_vectors(k, di):
            linear = {unit[j]: a[j] for j in range(k) if a[j]}
            poly = _poly_mul(poly, linear)
    e = {unit[j]: 1 for j in range(k)}
    for _ in range(delta):
        poly = _poly_mul(poly, e)
    ordered = dict(sorted(poly.items(), key=lambda t: (sum(t[0]), t[0])))
    return MultiPoly(k, ordered)


def hook_syt_count(rows: int, cols: int) -> int:
    """Standard Young tableaux of a rows x cols rectangle, by the hook-length formula."""
    if not (0 <= rows <= 7 and 0 <= cols <= 7):
        raise ValueError("hook_syt_count guard: rows, cols <= 7")
    hooks = 1
    for i in range(rows):
        for j in range(cols):
            hooks *= (cols - j - 1) + (rows - i - 1) + 1
    return math.factorial(rows * cols) // hooks


def straighten_bruteforce(alpha):
    """Try every permutation tau; return (sign, lambda) or None like ``straighten``."""
    alpha = tuple(alpha)
    k = len(alpha)
    if k > 6:
        raise ValueError("straighten_bruteforce guard: length <= 6")
    kappa = tuple(range(k - 1, -1, -1))
    shifted = tuple(a + c for a, c in zip(alpha, kappa))
    for tau in itertools.permutations(range(k)):
        # shifted = tau(lambda + kappa), i.e. shifted[tau[i]] = (lambda + kappa)[i]
        lk = tuple(shifted[tau[i]] for i in range(k))
        if all(x > y for x, y in zip(lk, lk[1:])):
            lam = tuple(x - c for x, c in zip(lk, kappa))
            if any(x < 0 for x in lam):
                return None
            inversions = sum(1 for i, j in itertools.combinations(range(k), 2) if tau[i] > tau[j])
            return (-1) ** inversions, lam
    return None


def bott_degree(n: int, d, r: int) -> int:
    """Plücker degree of F_r(X) by torus localization on G(r, P^n).

    Sums, over the coordinate r-planes I, the equivariant Euler class of
    Sym^d S* times c_1(O(1))^delta divided by the Euler class of the tangent
    space, all at distinct integer weights. Exact rational arithmetic.
    """
    d = MultiDegree.of(d)
    if not (0 <= r < n <= 12):
        raise ValueError("bott_degree guard: 0 <= r < n <= 12")
    dl = (r + 1) * (n - r) - sum(math.comb(di + r, r) for di in d)
    if dl < 0:
        raise ValueError("delta < 0")
    weights = [3 * i * i + i + 1 for i in range(n + 1)]
    total = Fraction(0)
    for plane in itertools.combinations(range(n + 1), r + 1):
        t = [weights[i] for i in plane]
        num = (-sum(t)) ** dl
        for di in d:
            for a in _all_exponent_vectors(r + 1, di):
                num *= -sum(x * y for x, y in zip(a, t))
        den = 1
        for j in range(n + 1):
            if j not in plane:
                for ti in t:
                    den *= weights[j] - ti
        total += Fraction(num, den)
    if total.denominator != 1:
        raise ArithmeticError(f"localization sum is not integral: {total}")
    return int(total)
