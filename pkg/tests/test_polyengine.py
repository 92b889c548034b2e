import itertools

import pytest
from hypothesis import given, settings, strategies as st

from fanoschemes.combinatorics import binom_sum
from fanoschemes.oracle import dense_expand
from fanoschemes.polyengine import MultiPoly, alternant_coefficient, build_Q, mul_e_power, mul_linear


def P(terms, caps=None, k=2):
    return MultiPoly(k, terms, caps)


def test_mul_linear_examples():
    assert mul_linear(MultiPoly.one(2), (3, 0)) == P({(1, 0): 3})
    assert mul_linear(P({(1, 1): 1}), (1, 1)) == P({(2, 1): 1, (1, 2): 1})
    assert mul_linear(P({(3, 0): 1}, caps=(3, 2)), (0, 1)) == P({(3, 1): 1})
    assert mul_linear(P({(3, 0): 1}, caps=(2, 2)), (0, 1)).is_zero()


def test_mul_linear_keeps_caps_and_checks_length():
    p = mul_linear(P({(1, 0): 1}, caps=5), (1, 1))
    assert p.caps == (5, 5)
    with pytest.raises(ValueError):
        mul_linear(p, (1, 1, 1))


def test_caps_drop_terms_at_construction():
    assert P({(3, 0): 1, (1, 1): 2}, caps=(2, 2)) == P({(1, 1): 2})


def test_build_Q_examples():
    assert build_Q(1, (3,)) == P({(3, 1): 18, (2, 2): 45, (1, 3): 18})
    assert build_Q(1, (1,)) == P({(1, 1): 1})
    assert build_Q(1, (2,)) == P({(2, 1): 4, (1, 2): 4})


def test_mul_e_power_examples():
    q2 = build_Q(1, (2,))
    assert mul_e_power(q2, 0) == q2
    assert mul_e_power(MultiPoly.one(2), 2) == P({(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert mul_e_power(q2, 1) == P({(3, 1): 4, (2, 2): 8, (1, 3): 4})
    with pytest.raises(ValueError):
        mul_e_power(q2, -1)


def test_alternant_coefficient_examples():
    assert alternant_coefficient(build_Q(1, (3,)), (3, 2)) == 27
    assert alternant_coefficient(mul_e_power(build_Q(1, (2,)), 1), (3, 2)) == 4
    assert alternant_coefficient(MultiPoly.zero(3), (5, 4, 3)) == 0


def test_alternant_refuses_lookup_beyond_caps():
    p = build_Q(1, (3,), caps=2)
    with pytest.raises(ValueError):
        alternant_coefficient(p, (4, 3))


def test_alternant_vanishes_on_repeated_shifted_target():
    # target - kappa = (a, a+1) makes target have equal entries; the
    # Vandermonde product is antisymmetric so this coefficient is 0
    p = mul_e_power(build_Q(1, (2,)), 2)
    assert alternant_coefficient(p, (3, 3)) == 0
    p = mul_e_power(build_Q(2, (2,)), 1)
    deg = sum(next(iter(p.terms)))
    for target in itertools.product(range(deg + 4), repeat=3):
        if sum(target) == deg + 3 and len(set(target)) < 3:
            assert alternant_coefficient(p, target) == 0


@pytest.mark.parametrize("r", [0, 1, 2])
@pytest.mark.parametrize("d", [(1,), (2,), (3,), (4,), (2, 3), (4, 2)])
def test_build_Q_is_symmetric_and_homogeneous(r, d):
    q = build_Q(r, d)
    terms = q.terms
    assert q.degrees() == {binom_sum(d, r, r)}
    for exps, c in terms.items():
        for perm in itertools.permutations(exps):
            assert terms[perm] == c


@pytest.mark.parametrize("d", [(1,), (2,), (3,), (4,), (2, 2)])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_capped_matches_dense_oracle(d, n):
    r = 1
    for delta in range(0, 4):
        if binom_sum(d, r, r) + delta > 24:
            continue
        dense = dense_expand(r, d, delta).terms
        capped = mul_e_power(build_Q(r, d, caps=n), delta).terms
        expected = {e: c for e, c in dense.items() if max(e) <= n}
        assert capped == expected


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.integers(0, 4))
def test_homogeneity_preserved(coeffs, delta):
    p = build_Q(2, (2,), caps=6)
    q = mul_e_power(mul_linear(p, coeffs), delta)
    assert q.is_homogeneous()
    assert all(max(e) <= 6 for e in q.terms)
    assert all(c != 0 for c in q.terms.values())
