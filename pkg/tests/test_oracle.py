import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greenseq.errors import SignIncoherence
from greenseq.oracle import (
    IceQuiver,
    coframed,
    enumerate_mgs,
    framed,
    green_vertices,
    ice_mutate,
    is_coframed_up_to_permutation,
)
from greenseq.pipeline import mgs_distribution, orientations
from greenseq.quiver import Quiver, preset


def test_framed_entries():
    assert framed(preset("A:1")).B.tolist() == [[0, 1], [-1, 0]]
    B = framed(preset("A:2")).B
    assert B.tolist() == [[0, 1, 1, 0], [-1, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]
    assert np.array_equal(coframed(preset("A:2")).B[:2, 2:], -B[:2, 2:])


def test_mutation_is_involution():
    R = framed(preset("Dtilde4-paper"))
    for k in range(R.m):
        assert ice_mutate(ice_mutate(R, k), k) == R
    with pytest.raises(ValueError):
        ice_mutate(R, R.m)


def test_colours():
    R = framed(preset("A:1"))
    assert green_vertices(R) == [0]
    assert green_vertices(ice_mutate(R, 0)) == []
    R2 = ice_mutate(framed(preset("A:2")), 0)
    assert green_vertices(R2) == [1]
    assert R2.B[2, 0] == 1 and R2.B[1, 0] == 1


def test_sign_incoherence():
    B = np.zeros((4, 4), dtype=np.int64)
    B[0, 2], B[2, 0] = 1, -1
    with pytest.raises(SignIncoherence):
        green_vertices(IceQuiver(B, 2))
    B[1, 2], B[2, 1], B[1, 3], B[3, 1] = 1, -1, -1, 1
    with pytest.raises(SignIncoherence):
        green_vertices(IceQuiver(B, 2))


def test_small_distributions():
    assert enumerate_mgs(preset("A:1"), 5).counts == {1: 1}
    assert enumerate_mgs(preset("A:2"), 5).counts == {2: 1, 3: 1}
    assert enumerate_mgs(preset("Atilde:1,1"), 10).counts == {2: 1}
    assert enumerate_mgs(preset("A:3"), 10).counts == {3: 1, 4: 4, 5: 2, 6: 2}


def test_short_budget_truncates():
    assert enumerate_mgs(preset("A:2"), 2).counts == {2: 1}
    assert enumerate_mgs(preset("A:2"), 1).counts == {}


@pytest.mark.parametrize("name", ["A:3", "D:4", "Atilde:2,1"])
def test_memo_equals_plain(name):
    ell = mgs_distribution(preset(name)).max_length
    q = preset(name)
    assert enumerate_mgs(q, ell) == enumerate_mgs(q, ell, memo=False)


def test_terminal_seed_is_coframed():
    q = preset("A:2")
    R = ice_mutate(ice_mutate(framed(q), 0), 1)
    assert green_vertices(R) == []
    assert is_coframed_up_to_permutation(R, q)
    assert is_coframed_up_to_permutation(coframed(q), q)
    assert not is_coframed_up_to_permutation(framed(q), q)


def _all_orientations():
    out = []
    for name in ["A:3", "A:4", "D:4"]:
        out.extend(oq for _, oq in orientations(preset(name)))
    return out


ORIENTED = _all_orientations()


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(ORIENTED))
def test_oracle_matches_pipeline_on_orientations(q: Quiver):
    dp = mgs_distribution(q)
    assert enumerate_mgs(q, dp.max_length + 2) == dp
