"""Hasse quiver of support tau-tilting modules reachable from A by mutation.

A support tau-tilting module is stored as a sorted tuple of catalog indices;
since the catalog is sorted, this is the canonical sequence of triples.
"""

from __future__ import annotations

from array import array
from bisect import insort
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .catalog import Catalog, Triple
from .errors import CardinalityViolation, SinkUnreachable
from .prec import PrecTable

State = tuple[int, ...]


@dataclass
class HasseGraph:
    """Static DAG: ``states[k]`` is vertex ``k``; ``edges`` is an (E, 2) int array."""

    catalog: Catalog
    states: list[State]
    edges: np.ndarray
    source: int
    sink: int

    @property
    def num_vertices(self) -> int:
        return len(self.states)

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    def triples(self, k: int) -> list[Triple]:
        tr = self.catalog.triples
        return [tr[x] for x in self.states[k]]

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Out-adjacency as (offsets, targets), targets kept in edge order."""
        n = self.num_vertices
        src = self.edges[:, 0]
        order = np.argsort(src, kind="stable")
        targets = self.edges[order, 1].astype(np.int64)
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
        return offsets, targets

    def out_degree(self) -> np.ndarray:
        return np.bincount(self.edges[:, 0], minlength=self.num_vertices)

    def in_degree(self) -> np.ndarray:
        return np.bincount(self.edges[:, 1], minlength=self.num_vertices)

    def stats(self) -> dict:
        return {"vertices": self.num_vertices, "arrows": self.num_edges}


def top_state(cat: Catalog) -> State:
    """The module A = P_0 + ... + P_n."""
    return tuple(sorted(cat.index[(0, i, 0)] for i in range(cat.vertices)))


def bottom_state(cat: Catalog) -> State:
    """The module 0 = P_0^- + ... + P_n^-."""
    return tuple(sorted(cat.index[(2, i, -1)] for i in range(cat.vertices)))


def mutate(T: Sequence[int], j: int, table: PrecTable) -> Optional[State]:
    """Downward mutation of ``T`` at position ``j``, or None.

    The other complement of ``T`` without ``T[j]`` is the unique second element
    of the intersection of the compatibility sets of the remaining summands.
    """
    co = table.coexist_bits
    M = (1 << table.catalog.size) - 1
    for i, x in enumerate(T):
        if i != j:
            M &= co[x]
    tj = T[j]
    if not M >> tj & 1:
        raise CardinalityViolation(f"summand {tj} is not compatible with the rest of {tuple(T)}")
    rest = M ^ (1 << tj)
    if not rest:
        return None
    if rest & (rest - 1):
        raise CardinalityViolation(f"more than two complements at position {j} of {tuple(T)}")
    y = rest.bit_length() - 1
    if not table.matrix[y, tj]:
        return None
    return tuple(sorted(T[:j] + tuple(T[j + 1:]) + (y,)))


def build_hasse(cat: Catalog, table: PrecTable) -> HasseGraph:
    """Breadth-first search from A through downward mutations.

    Vertices are numbered in discovery order, mutation positions are tried in
    ascending order, so the numbering is deterministic.
    """
    co = table.coexist_bits
    prec_rows = table.rows
    m = cat.vertices
    start = top_state(cat)
    states: list[State] = [start]
    seen: dict[State, int] = {start: 0}
    src = array("i")
    dst = array("i")
    full = (1 << cat.size) - 1
    k = 0
    while k < len(states):
        T = states[k]
        # prefix/suffix intersections give every "all but j" set in O(m)
        pre = [full] * (m + 1)
        suf = [full] * (m + 1)
        for i in range(m):
            pre[i + 1] = pre[i] & co[T[i]]
        for i in range(m - 1, -1, -1):
            suf[i] = suf[i + 1] & co[T[i]]
        for j in range(m):
            tj = T[j]
            rest = (pre[j] & suf[j + 1]) ^ (1 << tj)
            if not rest:
                continue
            if rest & (rest - 1):
                raise CardinalityViolation(f"more than two complements at position {j} of {T}")
            y = rest.bit_length() - 1
            if not prec_rows[y][tj]:
                continue
            lst = list(T[:j] + T[j + 1:])
            insort(lst, y)
            new = tuple(lst)
            idx = seen.get(new)
            if idx is None:
                idx = len(states)
                seen[new] = idx
                states.append(new)
            src.append(k)
            dst.append(idx)
        k += 1
    sink = seen.get(bottom_state(cat))
    if sink is None:
        raise SinkUnreachable("the zero module was never reached")
    edges = _edge_array(src, dst)
    return HasseGraph(cat, states, edges, 0, sink)


def _edge_array(src, dst) -> np.ndarray:
    e = np.empty((len(src), 2), dtype=np.int32)
    e[:, 0] = np.frombuffer(src, dtype=np.int32) if len(src) else 0
    e[:, 1] = np.frombuffer(dst, dtype=np.int32) if len(dst) else 0
    return e


def prune_to_finite(H: HasseGraph) -> HasseGraph:
    """Keep only vertices from which the sink is reachable.

    Surviving vertices keep their relative discovery order.
    """
    n = H.num_vertices
    e = H.edges
    # reverse adjacency in CSR form
    order = np.argsort(e[:, 1], kind="stable")
    rsrc = e[order, 0]
    roff = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(e[:, 1], minlength=n), out=roff[1:])
    keep = np.zeros(n, dtype=bool)
    keep[H.sink] = True
    queue = deque([H.sink])
    roff_l = roff.tolist()
    rsrc_l = rsrc.tolist()
    while queue:
        v = queue.popleft()
        for u in rsrc_l[roff_l[v]:roff_l[v + 1]]:
            if not keep[u]:
                keep[u] = True
                queue.append(u)
    if keep.all():
        return H
    newidx = np.full(n, -1, dtype=np.int64)
    kept = np.flatnonzero(keep)
    newidx[kept] = np.arange(len(kept))
    emask = keep[e[:, 0]] & keep[e[:, 1]]
    edges = newidx[e[emask]].astype(np.int32)
    states = [H.states[k] for k in kept.tolist()]
    return HasseGraph(H.catalog, states, edges, int(newidx[H.source]), int(newidx[H.sink]))


def finite_hasse(cat: Catalog, table: PrecTable) -> HasseGraph:
    return prune_to_finite(build_hasse(cat, table))


def _label(cat: Catalog, state: State) -> str:
    return " ".join("(%d,%d,%d)" % cat.triples[x] for x in state)


def emit_dot(H: HasseGraph) -> str:
    lines = ["digraph hasse {"]
    for k, st in enumerate(H.states):
        lines.append(f'  v{k} [label="{_label(H.catalog, st)}"];')
    for u, v in H.edges.tolist():
        lines.append(f"  v{u} -> v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def check_states(H: HasseGraph, table: PrecTable) -> None:
    """Assert that every vertex is a set of pairwise compatible summands."""
    m = H.catalog.vertices
    for k, st in enumerate(H.states):
        if len(set(st)) != m:
            raise CardinalityViolation(f"vertex {k} does not have {m} distinct summands")
        for a in range(m):
            for b in range(a + 1, m):
                if not table.compatible(st[a], st[b]):
                    raise CardinalityViolation(f"vertex {k}: summands {st[a]}, {st[b]} are incompatible")
