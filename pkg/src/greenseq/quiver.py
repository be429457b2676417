"""Quivers, their classification, and the integer matrices attached to them."""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    CyclicQuiver,
    DisconnectedQuiver,
    InvalidQuiver,
    NonUnimodular,
    NotSinkOrSource,
    UnsupportedQuiver,
)

DYNKIN_FAMILIES = ("A", "D", "E6", "E7", "E8")
TAME_FAMILIES = ("Atilde", "Dtilde", "Etilde6", "Etilde7", "Etilde8")


@dataclass(frozen=True)
class Quiver:
    """Finite quiver on vertices ``0..vertices-1``.

    Parallel arrows are allowed (they are listed repeatedly).  Validation of
    acyclicity and connectivity is left to :func:`validate_and_classify`, so
    that invalid quivers can still be constructed and reported on.
    """

    vertices: int
    arrows: tuple[tuple[int, int], ...] = ()
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.vertices, (int, np.integer)) or self.vertices < 1:
            raise InvalidQuiver(f"vertex count must be a positive integer, got {self.vertices!r}")
        arrows = tuple((int(s), int(t)) for s, t in self.arrows)
        for s, t in arrows:
            if not (0 <= s < self.vertices and 0 <= t < self.vertices):
                raise InvalidQuiver(f"arrow {s}->{t} has an endpoint outside [0, {self.vertices})")
        object.__setattr__(self, "vertices", int(self.vertices))
        object.__setattr__(self, "arrows", arrows)

    def successors(self) -> list[list[int]]:
        out = [[] for _ in range(self.vertices)]
        for s, t in self.arrows:
            out[s].append(t)
        return out

    def is_sink(self, i: int) -> bool:
        return all(s != i for s, _ in self.arrows)

    def is_source(self, i: int) -> bool:
        return all(t != i for _, t in self.arrows)

    def to_json(self) -> dict:
        d = {"vertices": self.vertices, "arrows": [list(a) for a in self.arrows]}
        if self.name is not None:
            d["name"] = self.name
        return d

    @classmethod
    def from_json(cls, data) -> "Quiver":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        try:
            vertices = data["vertices"]
            arrows = [tuple(a) for a in data.get("arrows", [])]
        except (KeyError, TypeError) as exc:
            raise InvalidQuiver(f"malformed quiver JSON: {exc}") from None
        if any(len(a) != 2 for a in arrows):
            raise InvalidQuiver("every arrow must be a [source, target] pair")
        return cls(vertices, tuple(arrows), data.get("name"))


@dataclass(frozen=True)
class QuiverClass:
    family: str
    params: tuple = ()

    @property
    def is_dynkin(self) -> bool:
        return self.family in DYNKIN_FAMILIES

    @property
    def is_tame(self) -> bool:
        return self.family in TAME_FAMILIES

    def __str__(self) -> str:
        if self.family in ("E6", "E7", "E8", "Etilde6", "Etilde7", "Etilde8"):
            return self.family
        return f"{self.family}{','.join(str(p) for p in self.params)}"


# ---------------------------------------------------------------------------
# validation and classification


def topological_order(q: Quiver) -> list[int]:
    """Kahn's algorithm on the quiver itself; raises CyclicQuiver on a cycle."""
    indeg = [0] * q.vertices
    succ = [[] for _ in range(q.vertices)]
    for s, t in q.arrows:
        if s == t:
            raise CyclicQuiver(f"loop at vertex {s}")
        succ[s].append(t)
        indeg[t] += 1
    queue = deque(i for i in range(q.vertices) if indeg[i] == 0)
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(order) != q.vertices:
        raise CyclicQuiver("quiver contains a directed cycle")
    return order


def _is_connected(q: Quiver) -> bool:
    adj = [set() for _ in range(q.vertices)]
    for s, t in q.arrows:
        adj[s].add(t)
        adj[t].add(s)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == q.vertices


def _classify_tree(m: int, adj: list[set[int]]) -> QuiverClass:
    deg = [len(a) for a in adj]
    branch = [v for v in range(m) if deg[v] >= 3]
    if not branch:
        return QuiverClass("A", (m,))
    if len(branch) == 1 and deg[branch[0]] == 4:
        # star with four unit arms
        if m == 5:
            return QuiverClass("Dtilde", (4,))
        raise UnsupportedQuiver("wild quiver: vertex of degree 4")
    if any(deg[v] > 3 for v in branch):
        raise UnsupportedQuiver("wild quiver: vertex of degree > 3")
    if len(branch) == 2:
        # D~_n: two branch points, each carrying two leaves
        leaves_ok = all(sum(1 for w in adj[b] if deg[w] == 1) == 2 for b in branch)
        if leaves_ok and m >= 6:
            return QuiverClass("Dtilde", (m - 1,))
        raise UnsupportedQuiver("wild quiver: two branch points")
    if len(branch) > 2:
        raise UnsupportedQuiver("wild quiver: more than two branch points")
    c = branch[0]
    arms = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while deg[cur] == 2:
            nxt = next(w for w in adj[cur] if w != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms = tuple(sorted(arms))
    if arms[:2] == (1, 1):
        return QuiverClass("D", (m,))
    table = {
        (1, 2, 2): "E6",
        (1, 2, 3): "E7",
        (1, 2, 4): "E8",
        (2, 2, 2): "Etilde6",
        (1, 3, 3): "Etilde7",
        (1, 2, 5): "Etilde8",
    }
    if arms in table:
        return QuiverClass(table[arms])
    raise UnsupportedQuiver(f"wild star quiver with arms {arms}")


def validate_and_classify(q: Quiver) -> QuiverClass:
    """Check acyclicity and connectivity, then identify the ADE / extended ADE type.

    For type Atilde the parameters ``(a, b)`` count the arrows running in the
    two directions around the cycle, with ``a >= b``.
    """
    topological_order(q)
    if not _is_connected(q):
        raise DisconnectedQuiver("underlying graph is not connected")
    m = q.vertices
    mult = Counter(tuple(sorted(a)) for a in q.arrows)
    if any(k > 1 for k in mult.values()):
        if m == 2 and mult[(0, 1)] == 2:
            return QuiverClass("Atilde", (1, 1))
        raise UnsupportedQuiver("wild quiver: multiple arrows")
    adj = [set() for _ in range(m)]
    for s, t in q.arrows:
        adj[s].add(t)
        adj[t].add(s)
    n_edges = len(mult)
    if n_edges == m - 1:
        return _classify_tree(m, adj)
    if n_edges == m and all(len(a) == 2 for a in adj):
        # walk the cycle once and count arrows in each direction
        arrowset = set(q.arrows)
        forward = 0
        prev, cur = None, 0
        for _ in range(m):
            nxt = next(w for w in sorted(adj[cur]) if w != prev)
            if (cur, nxt) in arrowset:
                forward += 1
            prev, cur = cur, nxt
        a, b = sorted((forward, m - forward), reverse=True)
        return QuiverClass("Atilde", (a, b))
    raise UnsupportedQuiver("wild quiver: underlying graph is not (extended) Dynkin")


def opposite(q: Quiver) -> Quiver:
    name = None if q.name is None else f"{q.name}^op"
    return Quiver(q.vertices, tuple((t, s) for s, t in q.arrows), name)


def reflect(q: Quiver, i: int) -> Quiver:
    """Reverse every arrow at a sink or source ``i``."""
    if not (q.is_sink(i) or q.is_source(i)):
        raise NotSinkOrSource(f"vertex {i} is neither a sink nor a source")
    arrows = tuple((t, s) if i in (s, t) else (s, t) for s, t in q.arrows)
    return Quiver(q.vertices, arrows, q.name)


def underlying_edges(q: Quiver) -> list[tuple[int, int]]:
    return [tuple(sorted(a)) for a in q.arrows]


# ---------------------------------------------------------------------------
# matrices


def path_count_matrix(q: Quiver) -> np.ndarray:
    """Entry ``(j, k)`` is the number of directed paths from ``k`` to ``j``."""
    order = topological_order(q)
    m = q.vertices
    succ = [[] for _ in range(m)]
    for s, t in q.arrows:
        succ[s].append(t)
    C = np.zeros((m, m), dtype=np.int64)
    for k in range(m):
        C[k, k] = 1
        for v in order:
            if C[v, k]:
                for w in succ[v]:
                    C[w, k] += C[v, k]
    return C


def cartan_matrix(q: Quiver) -> np.ndarray:
    """Cartan matrix of the path algebra; column k is dim P_k, row i is dim I_i."""
    return path_count_matrix(q)


def integer_inverse(C: np.ndarray) -> np.ndarray:
    """Exact inverse of a unimodular integer matrix (Gauss-Jordan over Q)."""
    n = C.shape[0]
    a = [[Fraction(int(x)) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(C)]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise NonUnimodular("matrix is singular")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det *= p
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    if abs(det) != 1:
        raise NonUnimodular(f"determinant is {det}, not +-1")
    inv = [row[n:] for row in a]
    if any(x.denominator != 1 for row in inv for x in row):
        raise NonUnimodular("inverse is not integral")
    return np.array([[int(x) for x in row] for row in inv], dtype=np.int64)


def coxeter_matrix(C: np.ndarray) -> np.ndarray:
    """``-C^T C^{-1}``; sends dim X to dim(tau X) for non-projective X."""
    C = np.asarray(C, dtype=np.int64)
    return -C.T @ integer_inverse(C)


def inverse_coxeter_matrix(C: np.ndarray) -> np.ndarray:
    """``-C C^{-T}``, the inverse of :func:`coxeter_matrix`."""
    C = np.asarray(C, dtype=np.int64)
    return -C @ integer_inverse(C).T


def deleted_quiver(q: Quiver, i: int) -> Quiver:
    """Same vertex set, every arrow touching ``i`` erased."""
    return Quiver(q.vertices, tuple(a for a in q.arrows if i not in a), q.name)


def restricted_matrices(q: Quiver, i: int) -> tuple[np.ndarray, np.ndarray]:
    """Cartan and Coxeter matrices of the algebra with vertex ``i`` deleted,
    kept at full size (row and column ``i`` of the Cartan matrix are ``e_i``)."""
    Cbar = (path_count_matrix(deleted_quiver(q, i)) > 0).astype(np.int64)
    return Cbar, coxeter_matrix(Cbar)


# ---------------------------------------------------------------------------
# presets


def _path(edges: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    return tuple(edges)


def preset(name: str) -> Quiver:
    """Build one of the documented preset quivers.

    ``A:n``        linear 0->1->...->n-1
    ``D:n``        0->2, 1->2, 2->3->...->n-1
    ``E:6|7|8``    arms 0 / 2-1 / 4-5-... at vertex 3, alternating orientation
    ``Atilde:a,b`` cycle on a+b vertices; 0->1->...->a and 0->a+b-1->...->a
    ``Dtilde:n``   0->2, 1->2, k+1->k (2<=k<=n-3), n-1->n-2, n->n-2
    ``Etilde:6|7|8``
    ``Dtilde4-paper``  0->2, 1->2, 2->3, 2->4
    ``Etilde8-paper``  3->0, 2->1, 2->3, 3->4, 5->4, 5->6, 7->6, 7->8
    """
    key = name.strip()
    try:
        if key == "Dtilde4-paper":
            return Quiver(5, ((0, 2), (1, 2), (2, 3), (2, 4)), key)
        if key in ("Etilde8-paper", "Etilde:8"):
            arrows = ((3, 0), (2, 1), (2, 3), (3, 4), (5, 4), (5, 6), (7, 6), (7, 8))
            return Quiver(9, arrows, key)
        family, _, arg = key.partition(":")
        if family == "A":
            n = int(arg)
            return Quiver(n, tuple((k, k + 1) for k in range(n - 1)), key)
        if family == "D":
            n = int(arg)
            if n < 4:
                raise ValueError
            arrows = [(0, 2), (1, 2)] + [(k, k + 1) for k in range(2, n - 1)]
            return Quiver(n, tuple(arrows), key)
        if family == "E":
            n = int(arg)
            if n not in (6, 7, 8):
                raise ValueError
            full = ((3, 0), (2, 1), (2, 3), (3, 4), (5, 4), (5, 6), (7, 6))
            return Quiver(n, tuple(a for a in full if max(a) < n), key)
        if family == "Atilde":
            a, b = (int(x) for x in arg.split(","))
            if a < 1 or b < 1:
                raise ValueError
            arrows = [(k, k + 1) for k in range(a)]
            ccw = [0] + list(range(a + b - 1, a, -1)) + [a]
            arrows += [(ccw[k], ccw[k + 1]) for k in range(b)]
            return Quiver(a + b, tuple(arrows), key)
        if family == "Dtilde":
            n = int(arg)
            if n < 4:
                raise ValueError
            arrows = [(0, 2), (1, 2)] + [(k + 1, k) for k in range(2, n - 2)]
            arrows += [(n - 1, n - 2), (n, n - 2)]
            return Quiver(n + 1, tuple(arrows), key)
        if family == "Etilde":
            n = int(arg)
            if n == 6:
                arrows = ((1, 0), (1, 2), (3, 2), (3, 4), (5, 2), (5, 6))
                return Quiver(7, arrows, key)
            if n == 7:
                arrows = ((1, 0), (1, 2), (3, 2), (3, 4), (5, 4), (5, 6), (3, 7))
                return Quiver(8, arrows, key)
    except ValueError:
        pass
    raise InvalidQuiver(f"unknown preset {name!r}")


PRESET_NAMES: Sequence[str] = (
    "A:n", "D:n", "E:6", "E:7", "E:8", "Atilde:a,b", "Dtilde:n",
    "Etilde:6", "Etilde:7", "Etilde:8", "Dtilde4-paper", "Etilde8-paper",
)
