"""Counting maximal paths of the finite Hasse quiver by length."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Context, Decimal
from typing import Optional, Sequence

import numpy as np

from .errors import CycleDetected
from .hasse import HasseGraph


@dataclass
class LengthDistribution:
    """Exact number of maximal green sequences of each length."""

    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.counts = {int(k): int(v) for k, v in sorted(self.counts.items()) if v}

    @property
    def lengths(self) -> list[int]:
        return sorted(self.counts)

    @property
    def min_length(self) -> Optional[int]:
        return min(self.counts) if self.counts else None

    @property
    def max_length(self) -> Optional[int]:
        return max(self.counts) if self.counts else None

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def no_gap(self) -> bool:
        if not self.counts:
            return True
        return len(self.counts) == self.max_length - self.min_length + 1

    def __getitem__(self, length: int) -> int:
        return self.counts.get(length, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, LengthDistribution):
            return self.counts == other.counts
        if isinstance(other, dict):
            return self.counts == {k: v for k, v in other.items() if v}
        return NotImplemented

    def diff(self, other: "LengthDistribution") -> dict[int, tuple[int, int]]:
        keys = sorted(set(self.counts) | set(other.counts))
        return {k: (self[k], other[k]) for k in keys if self[k] != other[k]}


def sci(n: int, digits: int = 4) -> str:
    """Scientific notation with ``digits`` significant digits, half-even rounding."""
    if n == 0:
        return "0." + "0" * (digits - 1) + "e+0"
    d = Context(prec=digits, rounding=ROUND_HALF_EVEN).create_decimal(Decimal(n))
    sign, dig, exp = d.as_tuple()
    dig = dig + (0,) * (digits - len(dig))
    e = exp + len(d.as_tuple().digits) - 1
    mant = f"{dig[0]}." + "".join(str(x) for x in dig[1:digits])
    return f"{'-' if sign else ''}{mant}e{'+' if e >= 0 else '-'}{abs(e)}"


def topo_sort(H: HasseGraph) -> list[int]:
    """Kahn's algorithm; ready vertices are taken smallest index first."""
    n = H.num_vertices
    indeg = H.in_degree().tolist()
    off, tgt = H.csr()
    off = off.tolist()
    tgt = tgt.tolist()
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    push, pop = heapq.heappush, heapq.heappop
    while heap:
        v = pop(heap)
        order.append(v)
        for w in tgt[off[v]:off[v + 1]]:
            indeg[w] -= 1
            if indeg[w] == 0:
                push(heap, w)
    if len(order) != n:
        raise CycleDetected("Hasse quiver is not acyclic")
    return order


def count_paths(H: HasseGraph, order: Optional[Sequence[int]] = None) -> LengthDistribution:
    """Number of source-to-sink paths of every length.

    Each vertex carries the counts of paths reaching it, indexed by length
    from its shortest distance to its longest.  A vertex pushes its counts
    shifted by one into every successor and is then dropped, so only the
    current frontier is kept in memory.
    """
    if order is None:
        order = topo_sort(H)
    n = H.num_vertices
    off, tgt = H.csr()
    off = off.tolist()
    tgt = tgt.tolist()
    s, t = H.source, H.sink

    # shortest and longest distance from s
    lo = [n] * n
    hi = [-1] * n
    lo[s] = hi[s] = 0
    for v in order:
        if hi[v] < 0:
            continue
        a, b = lo[v] + 1, hi[v] + 1
        for w in tgt[off[v]:off[v + 1]]:
            if a < lo[w]:
                lo[w] = a
            if b > hi[w]:
                hi[w] = b

    L: dict[int, np.ndarray] = {s: np.array([1], dtype=object)}
    for v in order:
        cur = L.pop(v, None)
        if cur is None:
            continue
        if v == t:
            L[t] = cur
            continue
        base = lo[v] + 1
        width = len(cur)
        for w in tgt[off[v]:off[v + 1]]:
            acc = L.get(w)
            if acc is None:
                acc = np.zeros(hi[w] - lo[w] + 1, dtype=object)
                L[w] = acc
            k = base - lo[w]
            acc[k:k + width] += cur
    final = L.get(t)
    if final is None:
        return LengthDistribution({})
    return LengthDistribution({lo[t] + i: int(c) for i, c in enumerate(final)})


def count_paths_dfs(H: HasseGraph) -> int:
    """Total number of source-to-sink paths by memoised search (no lengths)."""
    off, tgt = H.csr()
    off = off.tolist()
    tgt = tgt.tolist()
    memo: dict[int, int] = {H.sink: 1}
    # iterative post-order to avoid recursion limits
    stack = [(H.source, False)]
    while stack:
        v, done = stack.pop()
        if v in memo:
            continue
        succ = tgt[off[v]:off[v + 1]]
        if done:
            memo[v] = sum(memo[w] for w in succ)
            continue
        stack.append((v, True))
        stack.extend((w, False) for w in succ if w not in memo)
    return memo[H.source]


def summarize(dist: LengthDistribution, num_vertices: int) -> dict:
    """Report the extremal lengths, the total and the no-gap check."""
    return {
        "max_length": dist.max_length,
        "min_length": dist.min_length,
        "vertices_of_quiver": num_vertices,
        "min_equals_vertices": dist.min_length == num_vertices,
        "no_gap": dist.no_gap,
        "total": str(dist.total),
        "total_sci": sci(dist.total),
    }
