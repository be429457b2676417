import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from greenseq.errors import (
    CyclicQuiver,
    DisconnectedQuiver,
    InvalidQuiver,
    NotSinkOrSource,
    UnsupportedQuiver,
)
from greenseq.quiver import (
    Quiver,
    QuiverClass,
    cartan_matrix,
    coxeter_matrix,
    inverse_coxeter_matrix,
    integer_inverse,
    opposite,
    preset,
    reflect,
    restricted_matrices,
    validate_and_classify,
)

TAME_PRESETS = ["Dtilde4-paper", "Dtilde:4", "Dtilde:5", "Dtilde:6", "Dtilde:7",
                "Etilde:6", "Etilde:7", "Etilde:8", "Atilde:1,1", "Atilde:2,1",
                "Atilde:2,2", "Atilde:3,1"]
DYNKIN_PRESETS = ["A:1", "A:2", "A:3", "A:5", "D:4", "D:5", "E:6", "E:7", "E:8"]
ALL_PRESETS = TAME_PRESETS + DYNKIN_PRESETS


def count_paths_brute(q, k, j):
    """Number of directed paths k -> j by explicit DFS (independent of the DP)."""
    succ = q.successors()
    total = 0
    stack = [k]
    while stack:
        v = stack.pop()
        if v == j:
            total += 1
        stack.extend(succ[v])
    return total


@st.composite
def random_dags(draw, max_vertices=6):
    m = draw(st.integers(1, max_vertices))
    perm = draw(st.permutations(range(m)))
    arrows = []
    for a in range(m):
        for b in range(a + 1, m):
            arrows += [(perm[a], perm[b])] * draw(st.integers(0, 2))
    return Quiver(m, tuple(arrows))


# -- classification ---------------------------------------------------------

@pytest.mark.parametrize("name, family, params", [
    ("Dtilde4-paper", "Dtilde", (4,)),
    ("A:1", "A", (1,)),
    ("A:4", "A", (4,)),
    ("D:5", "D", (5,)),
    ("E:6", "E6", ()),
    ("E:7", "E7", ()),
    ("E:8", "E8", ()),
    ("Dtilde:6", "Dtilde", (6,)),
    ("Etilde:6", "Etilde6", ()),
    ("Etilde:7", "Etilde7", ()),
    ("Etilde8-paper", "Etilde8", ()),
    ("Atilde:1,1", "Atilde", (1, 1)),
    ("Atilde:3,2", "Atilde", (3, 2)),
])
def test_classify_presets(name, family, params):
    assert validate_and_classify(preset(name)) == QuiverClass(family, params)


def test_classify_dtilde4_from_arrows():
    q = Quiver(5, ((0, 2), (1, 2), (2, 3), (2, 4)))
    assert validate_and_classify(q) == QuiverClass("Dtilde", (4,))


def test_classify_errors():
    with pytest.raises(CyclicQuiver):
        validate_and_classify(Quiver(3, ((0, 1), (1, 2), (2, 0))))
    with pytest.raises(CyclicQuiver):
        validate_and_classify(Quiver(1, ((0, 0),)))
    with pytest.raises(DisconnectedQuiver):
        validate_and_classify(Quiver(3, ((0, 1),)))
    with pytest.raises(UnsupportedQuiver):
        validate_and_classify(Quiver(2, ((0, 1),) * 3))
    with pytest.raises(UnsupportedQuiver):
        # star with arms (2, 2, 3) is wild
        validate_and_classify(Quiver(8, ((0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (6, 7))))
    with pytest.raises(InvalidQuiver):
        Quiver(2, ((0, 2),))


def test_error_values_are_distinct():
    kinds = {CyclicQuiver, DisconnectedQuiver, UnsupportedQuiver}
    assert len(kinds) == 3 and not any(issubclass(a, b) for a in kinds for b in kinds if a is not b)


def test_json_roundtrip():
    q = preset("Dtilde4-paper")
    assert Quiver.from_json(q.to_json()) == q
    assert Quiver.from_json('{"vertices": 2, "arrows": [[0, 1]]}') == preset("A:2")


# -- opposite / reflect -----------------------------------------------------

def test_opposite():
    assert opposite(Quiver(2, ((0, 1),))).arrows == ((1, 0),)
    q = preset("Dtilde4-paper")
    assert opposite(opposite(q)) == q
    assert set(opposite(q).arrows) == {(2, 0), (2, 1), (3, 2), (4, 2)}


def test_reflect():
    q = preset("Dtilde4-paper")
    assert set(reflect(q, 3).arrows) == {(0, 2), (1, 2), (3, 2), (2, 4)}
    assert reflect(reflect(q, 3), 3) == q
    with pytest.raises(NotSinkOrSource):
        reflect(q, 2)


@pytest.mark.parametrize("name", ALL_PRESETS)
def test_reflect_preserves_class(name):
    q = preset(name)
    cls = validate_and_classify(q)
    for i in range(q.vertices):
        if q.is_sink(i) or q.is_source(i):
            assert validate_and_classify(reflect(q, i)) == cls


# -- matrices ---------------------------------------------------------------

def test_cartan_examples():
    assert cartan_matrix(preset("A:2")).tolist() == [[1, 0], [1, 1]]
    assert cartan_matrix(preset("A:1")).tolist() == [[1]]
    assert cartan_matrix(preset("Atilde:1,1")).tolist() == [[1, 0], [2, 1]]


def test_coxeter_examples():
    phi = coxeter_matrix(cartan_matrix(preset("A:2")))
    assert phi.tolist() == [[0, -1], [1, -1]]
    assert np.array_equal(np.linalg.matrix_power(phi, 3), np.eye(2, dtype=int))


def test_restricted_dtilde4_vertex0():
    Cbar, phibar = restricted_matrices(preset("Dtilde4-paper"), 0)
    # hand enumeration on 1->2, 2->3, 2->4
    expected = np.array([
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 1, 1, 0, 0],
        [0, 1, 1, 1, 0],
        [0, 1, 1, 0, 1],
    ])
    assert np.array_equal(Cbar, expected)
    assert phibar[0, 0] == -1 and not phibar[0, 1:].any() and not phibar[1:, 0].any()


def test_restricted_a1():
    Cbar, phibar = restricted_matrices(preset("A:1"), 0)
    assert Cbar.tolist() == [[1]] and phibar.tolist() == [[-1]]


@pytest.mark.parametrize("name", ALL_PRESETS)
def test_matrix_identities_on_presets(name):
    q = preset(name)
    C = cartan_matrix(q)
    phi = coxeter_matrix(C)
    assert round(abs(np.linalg.det(C))) == 1
    for i in range(q.vertices):
        assert np.array_equal(phi @ C[:, i], -C[i, :])
        Cbar, _ = restricted_matrices(q, i)
        assert round(abs(np.linalg.det(Cbar))) == 1
        assert np.array_equal(Cbar[:, i], np.eye(q.vertices, dtype=int)[i])
    assert np.array_equal(phi @ inverse_coxeter_matrix(C), np.eye(q.vertices, dtype=int))


@settings(max_examples=60, deadline=None)
@given(random_dags())
def test_cartan_properties(q):
    C = cartan_matrix(q)
    m = q.vertices
    for k in range(m):
        for j in range(m):
            assert C[j, k] == count_paths_brute(q, k, j)
        assert C[k, k] == 1
    assert np.array_equal(integer_inverse(C) @ C, np.eye(m, dtype=int))
    phi = coxeter_matrix(C)
    for i in range(m):
        assert np.array_equal(phi @ C[:, i], -C[i, :])
    assert np.array_equal(cartan_matrix(opposite(q)), C.T)
