"""The relation X < Y on a catalog and the derived compatibility table.

``comparison(X, Y)`` answers "X precedes Y", i.e. Hom(X, tau Y) = 0 (or the
appropriate support condition when a shifted projective is involved).  Two
distinct catalog members are compatible -- their sum is tau-rigid -- exactly
when each precedes the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .catalog import Catalog, Triple, Vec, _apply
from .errors import IndexOutOfCatalog, LoopOverflow


class _Ctx:
    """Per-catalog caches for Coxeter powers of dimension vectors."""

    def __init__(self, cat: Catalog):
        self.cat = cat
        self.mats = cat.mats
        self.dims = cat.dims
        self.m = cat.vertices

        @lru_cache(maxsize=None)
        def phi_pow(t: Triple, k: int) -> Vec:
            # k may be negative
            v = self.dims[t]
            M = self.mats.phi if k >= 0 else self.mats.phi_inv
            for _ in range(abs(k)):
                v = _apply(M, v)
            return v

        self.phi_pow = phi_pow

    def dim(self, t: Triple) -> Vec:
        try:
            return self.dims[t]
        except KeyError:
            raise IndexOutOfCatalog(f"{t} is not in the catalog") from None


def case_regular_pair(X: Triple, Y: Triple, cat: Catalog, _ctx: _Ctx | None = None) -> bool:
    """X < Y for two regular triples.

    Different tau-periods means different tubes, hence no maps either way.
    Otherwise look for a vertex i and a common tau-shift that moves both into
    mod A_i, and decide there by walking towards the A_i-projectives.
    """
    ctx = _ctx or _Ctx(cat)
    if X[1] != Y[1]:
        return True
    mats = ctx.mats
    cap = 4 * ctx.m * ctx.m + 8
    for i in range(ctx.m):
        phibar = mats.phibar[i]
        for r in range(X[1]):
            u = ctx.phi_pow(X, r)
            v = ctx.phi_pow(Y, r)
            if u[i] != 0 or v[i] != 0:
                continue
            j = mats.is_prj_i(i, u)
            k = mats.is_prj_i(i, v)
            steps = 0
            while j == -1 and k == -1:
                u = _apply(phibar, u)
                v = _apply(phibar, v)
                j = mats.is_prj_i(i, u)
                k = mats.is_prj_i(i, v)
                steps += 1
                if steps > cap:
                    raise LoopOverflow(f"walk in A_{i} for {X}, {Y} did not reach a projective")
            if k >= 0 or _apply(phibar, v)[j] == 0:
                return True
    return False


def _explain(X: Triple, Y: Triple, ctx: _Ctx) -> tuple[bool, str]:
    cat = ctx.cat
    dim = ctx.dim
    x0, x1, x2 = X
    y0, y1, y2 = Y
    if cat.kind == "finite":
        # only preprojectives and shifted projectives exist
        if x0 == 0 and y0 == 2:
            return dim(X)[y1] == 0, "preprojective vs P^-: support at the vertex"
    if x0 == 0 and y0 == 0:
        if x2 >= y2:
            return True, "preprojective pair: X at least as far from P as Y"
        return dim((0, y1, y2 - x2 - 1))[x1] == 0, "preprojective pair: support test"
    if x0 == 0 and y0 == 1:
        v = ctx.phi_pow(Y, (x2 + 1) % y1)
        return v[x1] == 0, "preprojective vs regular"
    if x0 == 0 and y0 == 2:
        s = y2 + x2 + 1
        if s < cat.q[y1]:
            return dim((2, y1, s))[x1] == 0, "preprojective vs preinjective: support test"
        return False, "preprojective vs preinjective: translate is sincere"
    if x0 == 1 and y0 == 1:
        return case_regular_pair(X, Y, cat, ctx), "regular pair"
    if x0 == 1 and y0 == 2:
        v = ctx.phi_pow(X, -((y2 + 1) % x1))
        return v[y1] == 0, "regular vs preinjective"
    if x0 == 2 and y0 == 2:
        if x2 <= y2:
            return True, "preinjective pair: X at least as close to I as Y"
        return dim((2, x1, x2 - y2 - 1))[y1] == 0, "preinjective pair: support test"
    return True, "always"


def comparison(X: Triple, Y: Triple, cat: Catalog, _ctx: _Ctx | None = None) -> bool:
    """True iff X precedes Y."""
    return _explain(X, Y, _ctx or _Ctx(cat))[0]


def explain(X: Triple, Y: Triple, cat: Catalog) -> tuple[bool, str]:
    """Like :func:`comparison` but also names the case that decided it."""
    ctx = _Ctx(cat)
    ctx.dim(X), ctx.dim(Y)
    return _explain(X, Y, ctx)


prec = comparison


@dataclass
class PrecTable:
    """Dense precedence matrix over a catalog plus the COEXIST sets as bitmasks.

    Bit ``k`` of ``coexist_bits[x]`` is set iff catalog entry ``k`` is
    compatible with entry ``x``.
    """

    catalog: Catalog
    matrix: np.ndarray  # bool, matrix[x, y] <=> X < Y
    coexist_bits: list[int]

    @property
    def rows(self) -> list[bytes]:
        return [bytes(r) for r in self.matrix.astype(np.uint8)]

    def prec(self, x: int, y: int) -> bool:
        return bool(self.matrix[x, y])

    def coexist(self, x: int) -> list[int]:
        b = self.coexist_bits[x]
        return [k for k in range(self.catalog.size) if b >> k & 1]

    def coexist_triples(self, t: Triple) -> list[Triple]:
        tr = self.catalog.triples
        return [tr[k] for k in self.coexist(self.catalog.index[t])]

    def compatible(self, x: int, y: int) -> bool:
        return bool(self.coexist_bits[x] >> y & 1)

    def total_coexist(self) -> int:
        return sum(bin(b).count("1") for b in self.coexist_bits)


def build_prec_table(cat: Catalog, progress: Callable[[int], None] | None = None) -> PrecTable:
    ctx = _Ctx(cat)
    tr = cat.triples
    n = len(tr)
    mat = np.zeros((n, n), dtype=bool)
    for a, X in enumerate(tr):
        row = mat[a]
        for b, Y in enumerate(tr):
            row[b] = _explain(X, Y, ctx)[0]
        if progress:
            progress(a)
    sym = mat & mat.T
    np.fill_diagonal(sym, False)
    bits = []
    for a in range(n):
        idx = np.flatnonzero(sym[a])
        v = 0
        for k in idx.tolist():
            v |= 1 << k
        bits.append(v)
    return PrecTable(cat, mat, bits)
