"""Brute-force maximal green sequences by mutating the framed quiver.

Independent of the catalog/Hasse pipeline; only meant for small quivers.
"""

from __future__ import annotations

import sys
from collections import Counter

import numpy as np

from .count import LengthDistribution
from .errors import SignIncoherence
from .quiver import Quiver


class IceQuiver:
    """Skew-symmetric exchange matrix with ``m`` mutable and ``m`` frozen vertices.

    ``B[x, y] > 0`` means ``B[x, y]`` arrows x -> y.  Frozen vertex ``m + i``
    is the copy of ``i``.
    """

    def __init__(self, B: np.ndarray, m: int):
        self.B = np.asarray(B, dtype=np.int64)
        self.m = m

    def __eq__(self, other):
        return isinstance(other, IceQuiver) and self.m == other.m and np.array_equal(self.B, other.B)

    def __repr__(self):
        return f"IceQuiver(m={self.m}, B={self.B.tolist()})"


def framed(q: Quiver) -> IceQuiver:
    m = q.vertices
    B = np.zeros((2 * m, 2 * m), dtype=np.int64)
    for s, t in q.arrows:
        B[s, t] += 1
        B[t, s] -= 1
    for i in range(m):
        B[i, m + i] = 1
        B[m + i, i] = -1
    return IceQuiver(B, m)


def coframed(q: Quiver) -> IceQuiver:
    R = framed(q)
    m = R.m
    R.B[:m, m:] *= -1
    R.B[m:, :m] *= -1
    return R


def _mutate(B: np.ndarray, k: int, m: int) -> np.ndarray:
    col = B[:, k]
    row = B[k, :]
    Bn = B + (np.abs(col)[:, None] * row[None, :] + col[:, None] * np.abs(row)[None, :]) // 2
    Bn[k, :] = -row
    Bn[:, k] = -col
    Bn[m:, m:] = 0
    return Bn


def ice_mutate(R: IceQuiver, k: int) -> IceQuiver:
    """Mutation at a mutable vertex; arrows between frozen vertices are dropped."""
    if not 0 <= k < R.m:
        raise ValueError(f"vertex {k} is not mutable")
    return IceQuiver(_mutate(R.B, k, R.m), R.m)


def green_vertices(R: IceQuiver) -> list[int]:
    """Mutable vertices with no arrow coming in from a frozen vertex."""
    m = R.m
    block = R.B[m:, :m]  # frozen -> mutable counts
    green = []
    for i in range(m):
        c = block[:, i]
        has_in = (c > 0).any()
        has_out = (c < 0).any()
        if has_in and has_out:
            raise SignIncoherence(f"vertex {i} has arrows both to and from frozen vertices")
        if not has_in and not has_out:
            raise SignIncoherence(f"vertex {i} is not attached to any frozen vertex")
        if not has_in:
            green.append(i)
    return green


def enumerate_mgs(q: Quiver, max_len: int, check_terminal: bool = True,
                  memo: bool = True) -> LengthDistribution:
    """Count maximal green sequences of length at most ``max_len`` by length.

    Sequences still having a green vertex after ``max_len`` steps are dropped,
    which is harmless when ``max_len`` is at least the maximal length.  With
    ``memo`` the counts below a seed are cached by (exact matrix, remaining
    budget); different sequences reaching the same matrix still count
    separately.  ``memo=False`` walks every sequence explicitly.
    """
    if memo:
        return _enumerate_memo(q, max_len, check_terminal)
    m = q.vertices
    counts: Counter = Counter()
    stack = [(framed(q).B, 0)]
    while stack:
        B, depth = stack.pop()
        green = green_vertices(IceQuiver(B, m))
        if not green:
            if check_terminal and not is_coframed_up_to_permutation(IceQuiver(B, m), q):
                raise SignIncoherence("seed without green vertices is not the coframed quiver")
            counts[depth] += 1
            continue
        if depth >= max_len:
            continue
        for k in reversed(green):
            stack.append((_mutate(B, k, m), depth + 1))
    return LengthDistribution(dict(counts))


def _enumerate_memo(q: Quiver, max_len: int, check_terminal: bool) -> LengthDistribution:
    m = q.vertices
    cache: dict[tuple[bytes, int], dict[int, int]] = {}

    def below(B: np.ndarray, budget: int) -> dict[int, int]:
        # lengths measured from this seed
        key = (B.tobytes(), budget)
        hit = cache.get(key)
        if hit is not None:
            return hit
        green = green_vertices(IceQuiver(B, m))
        if not green:
            if check_terminal and not is_coframed_up_to_permutation(IceQuiver(B, m), q):
                raise SignIncoherence("seed without green vertices is not the coframed quiver")
            out = {0: 1}
        elif budget == 0:
            out = {}
        else:
            acc: Counter = Counter()
            for k in green:
                for length, c in below(_mutate(B, k, m), budget - 1).items():
                    acc[length + 1] += c
            out = dict(acc)
        cache[key] = out
        return out

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * max_len + 100))
    try:
        return LengthDistribution(below(framed(q).B, max_len))
    finally:
        sys.setrecursionlimit(limit)


def is_coframed_up_to_permutation(R: IceQuiver, q: Quiver) -> bool:
    """Check that a terminal seed is the coframed quiver with relabelled vertices.

    The frozen-to-mutable block must be a permutation matrix, and the mutable part
    must be the original quiver conjugated by that permutation.
    """
    m = R.m
    F = R.B[m:, :m]  # F[f, i] = 1 iff arrow c(f) -> i
    if not ((F == 0) | (F == 1)).all():
        return False
    if not (F.sum(axis=0) == 1).all() or not (F.sum(axis=1) == 1).all():
        return False
    # mutable vertex i corresponds to original vertex perm[i]
    perm = [int(np.flatnonzero(F[:, i])[0]) for i in range(m)]
    target = framed(q).B[:m, :m]
    mut = R.B[:m, :m]
    return bool(np.array_equal(mut, target[np.ix_(perm, perm)]))
