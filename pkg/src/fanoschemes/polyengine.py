"""Sparse multivariate polynomials with big-integer coefficients.

Only what the degree computation needs: multiplication by linear forms,
optionally discarding monomials whose exponent in some variable exceeds a
cap, and a signed coefficient lookup that stands in for multiplying by the
Vandermonde determinant.

Monomials are stored as packed ints, ``_BITS`` bits per variable, so that
multiplying by ``x_j`` is a single integer addition.
"""
from __future__ import annotations

from typing import Mapping, Optional, Sequence

from .combinatorics import MultiDegree, multi_indices, signed_permutations

_BITS = 16
_MASK = (1 << _BITS) - 1
_MAX_EXPONENT = _MASK


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > _MAX_EXPONENT:
            raise ValueError(f"exponent {e} out of range")
        key |= e << (_BITS * i)
    return key


def _unpack(key: int, num_vars: int) -> tuple:
    return tuple((key >> (_BITS * i)) & _MASK for i in range(num_vars))


class MultiPoly:
    """Immutable sparse polynomial in ``num_vars`` variables over the integers.

    ``caps``, when set, bounds every exponent component-wise; operations
    drop monomials that would exceed it.
    """

    __slots__ = ("num_vars", "caps", "_terms")

    def __init__(self, num_vars: int, terms: Optional[Mapping] = None, caps=None):
        if num_vars < 1:
            raise ValueError("need at least one variable")
        self.num_vars = num_vars
        self.caps = _normalize_caps(caps, num_vars)
        packed = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != num_vars:
                raise ValueError(f"exponent vector {exps} has wrong length")
            if c == 0 or not self._within_caps(exps):
                continue
            k = _pack(exps)
            packed[k] = packed.get(k, 0) + int(c)
        self._terms = {k: v for k, v in packed.items() if v}

    @classmethod
    def _from_packed(cls, num_vars, packed, caps):
        p = cls.__new__(cls)
        p.num_vars = num_vars
        p.caps = caps
        p._terms = packed
        return p

    @classmethod
    def one(cls, num_vars: int, caps=None) -> "MultiPoly":
        return cls(num_vars, {(0,) * num_vars: 1}, caps)

    @classmethod
    def zero(cls, num_vars: int, caps=None) -> "MultiPoly":
        return cls(num_vars, {}, caps)

    def _within_caps(self, exps) -> bool:
        return self.caps is None or all(e <= c for e, c in zip(exps, self.caps))

    @property
    def terms(self) -> dict:
        """Mapping exponent tuple -> coefficient (a fresh dict)."""
        return {_unpack(k, self.num_vars): v for k, v in self._terms.items()}

    def coeff(self, exps: Sequence[int]) -> int:
        if len(exps) != self.num_vars:
            raise ValueError(f"exponent vector {tuple(exps)} has wrong length")
        if any(e < 0 for e in exps):
            return 0
        return self._terms.get(_pack(exps), 0)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps) if e
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def _normalize_caps(caps, num_vars):
    if caps is None:
        return None
    if isinstance(caps, int):
        caps = (caps,) * num_vars
    caps = tuple(int(c) for c in caps)
    if len(caps) != num_vars:
        raise ValueError(f"caps {caps} do not match {num_vars} variables")
    if any(c < 0 for c in caps):
        raise ValueError("caps must be nonnegative")
    return caps


def mul_linear(p: MultiPoly, coeffs: Sequence[int]) -> MultiPoly:
    """Multiply ``p`` by sum_i coeffs[i] * x_i, dropping monomials beyond the caps."""
    if len(coeffs) != p.num_vars:
        raise ValueError(f"linear form has {len(coeffs)} coefficients, polynomial has {p.num_vars} variables")
    out: dict = {}
    get = out.get
    items = list(p._terms.items())
    for j, c in enumerate(coeffs):
        if not c:
            continue
        shift = _BITS * j
        inc = 1 << shift
        if p.caps is None:
            for key, v in items:
                k2 = key + inc
                out[k2] = get(k2, 0) + c * v
        else:
            cap = p.caps[j]
            for key, v in items:
                if (key >> shift) & _MASK < cap:
                    k2 = key + inc
                    out[k2] = get(k2, 0) + c * v
    return MultiPoly._from_packed(p.num_vars, {k: v for k, v in out.items() if v}, p.caps)


def build_Q(r: int, d, caps=None) -> MultiPoly:
    """Product over each degree d_i and each a with |a| = d_i of (a_0 x_0 + ... + a_r x_r).

    This polynomial represents the top Chern class of Sym^d of the dual
    tautological bundle on G(r, P^n).
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    d = MultiDegree.of(d)
    p = MultiPoly.one(r + 1, caps)
    for di in d:
        for a in multi_indices(r, di):
            p = mul_linear(p, a)
    return p


def mul_e_power(p: MultiPoly, delta: int) -> MultiPoly:
    """Multiply ``p`` by (x_0 + ... + x_r)^delta."""
    if delta < 0:
        raise ValueError(f"delta must be >= 0, got {delta}")
    ones = (1,) * p.num_vars
    for _ in range(delta):
        p = mul_linear(p, ones)
    return p


def alternant_coefficient(p: MultiPoly, target: Sequence[int]) -> int:
    """Coefficient of x^target in p * prod_{i<j} (x_i - x_j).

    Never expands the Vandermonde: sums sign(s) * coeff_p(target - kappa o s)
    over permutations s, with kappa = (r, ..., 1, 0).
    """
    k = p.num_vars
    if len(target) != k:
        raise ValueError(f"target {tuple(target)} has wrong length")
    kappa = tuple(range(k - 1, -1, -1))
    total = 0
    for perm, sign in signed_permutations(k):
        exps = [t - kappa[perm[i]] for i, t in enumerate(target)]
        if any(e < 0 for e in exps):
            continue
        if p.caps is not None and any(e > c for e, c in zip(exps, p.caps)):
            raise ValueError(f"lookup {tuple(exps)} exceeds caps {p.caps}; result would be wrong")
        total += sign * p.coeff(exps)
    return total
