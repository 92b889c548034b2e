import pytest
from hypothesis import given, settings, strategies as st

from fanoschemes.combinatorics import binom
from fanoschemes.invariants import FanoProblem
from fanoschemes.unirationality import (
    expanded_multidegree, fano_unirationality_bound, load_overrides, parse_overrides, ps_pair,
)


def pair(d, overrides=None):
    b = ps_pair(d, overrides)
    return b.r_of_d, b.n_of_d


def test_ps_pair_examples():
    assert pair((1,)) == (0, 0)
    assert pair((1, 1, 1, 1)) == (0, 3)
    assert pair((2, 2, 2, 2)) == (3, 19)
    assert pair((3, 3, 3, 3)) == (19, 859)
    assert pair((3, 3))[0] == 5


def test_ps_pair_override_recomputes_n():
    r, n = pair((3, 3, 3, 3), {(3, 3, 3, 3): 13})
    assert r == 13
    assert n == 13 + 4 * binom(3 + 13 - 1, 13)
    b = ps_pair((3, 3, 3, 3), {"3,3,3,3": 13})
    assert b.overrides_used == {(3, 3, 3, 3): 13}


def test_override_deep_in_recursion_is_recorded():
    b = ps_pair((3, 3), {(2, 2): 0})
    assert b.overrides_used == {(2, 2): 0}
    # r(3,3) = n(2,2) with r(2,2) forced to 0: 0 + 2 * C(1, 0)
    assert b.r_of_d == 2


@pytest.mark.parametrize("s", range(1, 6))
def test_closed_forms(s):
    assert ps_pair((2,) * s).r_of_d == s - 1
    assert ps_pair((3,) * s).r_of_d == s * s + s - 1
    assert ps_pair((4,) * s).r_of_d == s * s + s - 1 + s * s * (s + 1) * (s * s + s + 1) // 2


@pytest.mark.parametrize("s", range(1, 5))
@pytest.mark.parametrize("r", range(0, 5))
def test_quadric_fano_bound_closed_form(s, r):
    assert fano_unirationality_bound((2,) * s, r).bound == s * (s + 1) * binom(r + 2, 2) * (r + 1) - 1


def test_fano_bound_examples():
    b = fano_unirationality_bound((3,), 1)
    assert b.D.degrees == (3, 3, 3, 3)
    assert (b.r_D, b.r1, b.bound) == (19, 39, 859)
    assert b.bound == 39 + binom(41, 39)
    b = fano_unirationality_bound((3,), 1, {(3, 3, 3, 3): 13})
    assert (b.r_D, b.r1, b.bound) == (13, 27, 433)
    assert b.overrides_used == {(3, 3, 3, 3): 13}
    assert fano_unirationality_bound((2, 2), 2).bound == 107
    assert fano_unirationality_bound(FanoProblem(10, (3,), 1)).bound == 859


def test_fano_bound_rejects_linear_equations():
    with pytest.raises(ValueError, match="degree-1"):
        fano_unirationality_bound((1, 3), 1)


def test_r1_identity():
    for d in [(2,), (3,), (2, 3), (4,)]:
        for r in range(3):
            b = fano_unirationality_bound(d, r)
            assert b.r1 == (b.r_D + 1) * (r + 1) - 1
            assert len(b.D) == sum(binom(di + r, r) for di in d)


def test_expanded_multidegree():
    assert expanded_multidegree((2, 3), 1).degrees == (2, 2, 2, 3, 3, 3, 3)


small_degrees = st.lists(st.integers(1, 4), min_size=1, max_size=4)


@settings(max_examples=60, deadline=None)
@given(small_degrees, st.randoms())
def test_ps_pair_permutation_invariant(d, rnd):
    shuffled = list(d)
    rnd.shuffle(shuffled)
    assert pair(d) == pair(shuffled)


@settings(max_examples=60, deadline=None)
@given(small_degrees, st.integers(1, 4))
def test_appending_never_decreases_n(d, extra):
    assert pair(d + [extra])[1] >= pair(d)[1]


@settings(max_examples=60, deadline=None)
@given(small_degrees)
def test_n_at_least_r(d):
    r, n = pair(d)
    assert n >= r >= 0


def test_parse_overrides_grammar(tmp_path):
    text = """
    # improved base value
    d=3,3,3,3 r=13
      d = 2, 2   r = 1   # trailing comment
    """
    assert parse_overrides(text) == {(3, 3, 3, 3): 13, (2, 2): 1}
    f = tmp_path / "ov.txt"
    f.write_text("d=3,3,3,3 r=13\n")
    assert load_overrides(f) == {(3, 3, 3, 3): 13}


@pytest.mark.parametrize("bad", ["d=3,3 r=", "r=4 d=3", "d=3,,3 r=1", "d=0 r=1", "x=1"])
def test_parse_overrides_errors(bad):
    with pytest.raises(ValueError, match="line 1"):
        parse_overrides(bad)
