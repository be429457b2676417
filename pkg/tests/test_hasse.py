import numpy as np
import pytest

from greenseq.catalog import build_catalog
from greenseq.errors import CardinalityViolation
from greenseq.hasse import (
    HasseGraph,
    bottom_state,
    build_hasse,
    check_states,
    emit_dot,
    mutate,
    prune_to_finite,
    top_state,
)
from greenseq.prec import build_prec_table
from greenseq.quiver import preset


def _setup(name):
    cat = build_catalog(preset(name))
    table = build_prec_table(cat)
    return cat, table


@pytest.fixture(scope="module")
def dtilde4():
    cat, table = _setup("Dtilde4-paper")
    raw = build_hasse(cat, table)
    return cat, table, raw, prune_to_finite(raw)


def test_a1():
    cat, table = _setup("A:1")
    H = prune_to_finite(build_hasse(cat, table))
    assert H.stats() == {"vertices": 2, "arrows": 1}
    assert H.edges.tolist() == [[0, 1]]
    assert H.source == 0 and H.sink == 1


def test_dtilde4_sizes(dtilde4):
    _, _, raw, H = dtilde4
    assert H.stats() == {"vertices": 314, "arrows": 743}
    assert raw.num_vertices >= H.num_vertices


def test_dtilde4_mutation_examples(dtilde4):
    cat, table, _, _ = dtilde4
    A = top_state(cat)
    B = mutate(A, 3, table)
    assert B is not None
    new = set(B) - set(A)
    assert [cat.triples[x] for x in new] == [(0, 3, 1)]
    # the other direction is an upward mutation
    j = B.index(next(iter(new)))
    assert mutate(B, j, table) is None
    Z = bottom_state(cat)
    for j in range(cat.vertices):
        assert mutate(Z, j, table) is None


def test_mutation_of_incompatible_raises(dtilde4):
    cat, table, _, _ = dtilde4
    bad = tuple(sorted({cat.index[(0, 0, 0)], cat.index[(0, 0, 1)], *top_state(cat)[1:]}))[:5]
    with pytest.raises(CardinalityViolation):
        check_states(
            HasseGraph(cat, [bad], np.zeros((0, 2), dtype=np.int32), 0, 0), table)


def test_dtilde4_structure(dtilde4):
    cat, table, _, H = dtilde4
    assert H.in_degree()[H.source] == 0
    assert H.out_degree()[H.sink] == 0
    assert H.out_degree()[H.source] == 5
    assert H.in_degree()[H.sink] == 5
    assert H.states[H.sink] == bottom_state(cat)
    assert H.states[H.source] == top_state(cat)
    # every non-source vertex is reachable and every vertex reaches the sink
    assert (H.in_degree() > 0).sum() == H.num_vertices - 1
    assert (H.out_degree() > 0).sum() == H.num_vertices - 1
    # neighbours differ in exactly one summand
    for u, v in H.edges.tolist():
        assert len(set(H.states[u]) ^ set(H.states[v])) == 2
    check_states(H, table)


def test_antisymmetric(dtilde4):
    _, _, _, H = dtilde4
    pairs = set(map(tuple, H.edges.tolist()))
    assert len(pairs) == H.num_edges
    assert not any((v, u) in pairs for u, v in pairs)


@pytest.mark.parametrize("name", ["A:1", "A:2", "A:3", "A:4", "D:4"])
def test_pruning_is_identity_for_finite_type(name):
    cat, table = _setup(name)
    raw = build_hasse(cat, table)
    assert prune_to_finite(raw) is raw


def test_prune_toy():
    cat, _ = _setup("A:1")
    # 0 -> 1 -> 3 is the sink path, 2 is a dead end hanging off 0
    edges = np.array([[0, 1], [0, 2], [1, 3]], dtype=np.int32)
    states = [(0,), (1,), (2,), (3,)]
    H = prune_to_finite(HasseGraph(cat, states, edges, 0, 3))
    assert H.states == [(0,), (1,), (3,)]
    assert H.edges.tolist() == [[0, 1], [1, 2]]
    assert (H.source, H.sink) == (0, 2)


def test_dot_output(dtilde4):
    cat, table = _setup("A:1")
    H = prune_to_finite(build_hasse(cat, table))
    dot = emit_dot(H)
    assert dot.startswith("digraph hasse {")
    assert dot.count("[label=") == 2
    assert "v0 -> v1;" in dot
    assert dot == emit_dot(prune_to_finite(build_hasse(cat, table)))
    H4 = dtilde4[3]
    assert emit_dot(H4).count("[label=") == 314


def test_deterministic():
    cat, table = _setup("Dtilde:5")
    a = build_hasse(cat, table)
    b = build_hasse(cat, table)
    assert a.states == b.states
    assert np.array_equal(a.edges, b.edges)
