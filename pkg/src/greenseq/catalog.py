"""Finite catalogs of candidate indecomposables.

A module (or shifted projective) is encoded as a triple ``(a, b, c)``:

* ``(0, i, r)``   the preprojective tau^{-r} P_i
* ``(1, b, c)``   a regular module of tau-period ``b`` carrying the number ``c``
* ``(2, i, r)``   the preinjective tau^{r} I_i, and ``(2, i, -1)`` for P_i^-

For a tame quiver the catalog contains every indecomposable that can occur in
a maximal green sequence; for a Dynkin quiver it is all of ind A plus the
shifted projectives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import InternalInvariantError, OrbitOverflow, UnsupportedQuiver
from .quiver import (
    Quiver,
    QuiverClass,
    cartan_matrix,
    coxeter_matrix,
    integer_inverse,
    inverse_coxeter_matrix,
    restricted_matrices,
    validate_and_classify,
)

Triple = tuple[int, int, int]
Vec = tuple[int, ...]


def _vec(a) -> Vec:
    return tuple(int(x) for x in a)


def _apply(M: np.ndarray, v: Vec) -> Vec:
    return _vec(M @ np.asarray(v, dtype=np.int64))


def _nonneg(v: Vec) -> bool:
    return all(x >= 0 for x in v)


@dataclass
class QuiverMatrices:
    """Cartan/Coxeter data of A and of every vertex deletion A_i (full size)."""

    C: np.ndarray
    phi: np.ndarray
    phi_inv: np.ndarray
    Cbar: list[np.ndarray]
    phibar: list[np.ndarray]
    phibar_inv: list[np.ndarray]
    proj: list[Vec]
    inj: list[Vec]
    proj_lookup: dict[Vec, int]
    inj_lookup: dict[Vec, int]
    proj_i_lookup: list[dict[Vec, int]]

    @classmethod
    def of(cls, q: Quiver) -> "QuiverMatrices":
        C = cartan_matrix(q)
        m = q.vertices
        Cbar, phibar, phibar_inv, proj_i = [], [], [], []
        for i in range(m):
            Cb, Pb = restricted_matrices(q, i)
            Cbar.append(Cb)
            phibar.append(Pb)
            phibar_inv.append(inverse_coxeter_matrix(Cb))
            # column i of Cbar is e_i, which is not a module over A_i
            proj_i.append({_vec(Cb[:, k]): k for k in range(m) if k != i})
        proj = [_vec(C[:, k]) for k in range(m)]
        inj = [_vec(C[k, :]) for k in range(m)]
        return cls(
            C=C,
            phi=coxeter_matrix(C),
            phi_inv=inverse_coxeter_matrix(C),
            Cbar=Cbar,
            phibar=phibar,
            phibar_inv=phibar_inv,
            proj=proj,
            inj=inj,
            proj_lookup={v: k for k, v in enumerate(proj)},
            inj_lookup={v: k for k, v in enumerate(inj)},
            proj_i_lookup=proj_i,
        )

    def is_prj(self, u) -> int:
        return self.proj_lookup.get(_vec(u), -1)

    def is_inj(self, u) -> int:
        return self.inj_lookup.get(_vec(u), -1)

    def is_prj_i(self, i: int, u) -> int:
        return self.proj_i_lookup[i].get(_vec(u), -1)


@dataclass
class Catalog:
    """The candidate set Lambda with its dimension-vector map.

    ``triples`` is sorted lexicographically, so a position in ``triples`` is
    also a rank in the total order used for canonical support tau-tilting
    sequences.
    """

    quiver: Quiver
    qclass: QuiverClass
    kind: str  # "finite" or "tame"
    mats: QuiverMatrices
    triples: list[Triple]
    dims: dict[Triple, Vec]
    p: list[int]
    q: list[int]
    m_thresh: int
    S: list[Vec] = field(default_factory=list)
    regular_periods: dict[int, int] = field(default_factory=dict)
    index: dict[Triple, int] = field(init=False)

    def __post_init__(self):
        self.index = {t: k for k, t in enumerate(self.triples)}

    @property
    def size(self) -> int:
        return len(self.triples)

    @property
    def vertices(self) -> int:
        return self.quiver.vertices

    def dim(self, t: Triple) -> Vec:
        return self.dims[t]

    def dim_matrix(self) -> np.ndarray:
        return np.array([self.dims[t] for t in self.triples], dtype=np.int64)

    def is_prj(self, u) -> int:
        return self.mats.is_prj(u)

    def is_inj(self, u) -> int:
        return self.mats.is_inj(u)

    def is_prj_i(self, i: int, u) -> int:
        return self.mats.is_prj_i(i, u)

    def shifted_projectives(self) -> list[Triple]:
        return [(2, i, -1) for i in range(self.vertices)]

    def regular_triples(self) -> list[Triple]:
        return [t for t in self.triples if t[0] == 1]

    def to_json(self) -> dict:
        return {
            "type": str(self.qclass),
            "kind": self.kind,
            "size": self.size,
            "triples": [list(t) for t in self.triples],
            "dims": [list(self.dims[t]) for t in self.triples],
            "p": self.p,
            "q": self.q,
            "m_thresh": self.m_thresh,
            "nonsincere_count": len(self.S),
        }


# ---------------------------------------------------------------------------
# tame case


def _walk_cap(m: int) -> int:
    # generous bound on the number of indecomposables of a Dynkin deletion
    return 4 * m * m + 8


def nonsincere_modules(q: Quiver, mats: Optional[QuiverMatrices] = None) -> list[Vec]:
    """Dimension vectors of all nonsincere indecomposables, sorted lexicographically.

    Every such module lives over some deletion A_i, which is representation
    finite, so it lies in the tau^{-1}-orbit of an A_i-projective.
    """
    mats = mats or QuiverMatrices.of(q)
    m = q.vertices
    cap = _walk_cap(m)
    S: set[Vec] = set()
    for i in range(m):
        step = mats.phibar_inv[i]
        for j in range(m):
            if j == i:
                continue
            v = _vec(mats.Cbar[i][:, j])
            steps = 0
            while _nonneg(v):
                S.add(v)
                v = _apply(step, v)
                steps += 1
                if steps > cap:
                    raise OrbitOverflow(f"tau^-1 walk in A_{i} from P_{j} did not terminate")
    return sorted(S)


@dataclass
class RegularData:
    triples: list[Triple]
    dims: dict[Triple, Vec]
    p: list[int]
    q: list[int]
    m_thresh: int
    periods: dict[int, int]


def build_regulars(q: Quiver, S: list[Vec], mats: Optional[QuiverMatrices] = None) -> RegularData:
    """Walk the tau-orbit of every nonsincere vector.

    An orbit that reaches a projective (resp. injective) updates ``p`` (resp.
    ``q``); an orbit that closes up contributes one regular triple per member.
    The projective test runs first when both could fire at the same step.
    """
    mats = mats or QuiverMatrices.of(q)
    m = q.vertices
    p = [0] * m
    qq = [0] * m
    triples: list[Triple] = []
    dims: dict[Triple, Vec] = {}
    periods: dict[int, int] = {}
    used: set[Vec] = set()
    c = 1
    cap = len(S) + 1
    for u in sorted(S):
        if u in used:
            continue
        orbit: list[Vec] = []
        v = w = u
        b = 0
        while True:
            j = mats.is_prj(v)
            k = mats.is_inj(w)
            if j >= 0:
                p[j] = max(p[j], b + 1)
                break
            if k >= 0:
                qq[k] = max(qq[k], b + 1)
                break
            if b >= 1 and u == v:
                for x in orbit:
                    t = (1, b, c)
                    triples.append(t)
                    dims[t] = x
                    periods[c] = b
                    used.add(x)
                    c += 1
                break
            orbit.append(v)
            v = _apply(mats.phi, v)
            w = _apply(mats.phi_inv, w)
            b += 1
            if b > cap:
                raise OrbitOverflow(f"tau-orbit of {u} exceeded {cap} steps")
    return RegularData(triples, dims, p, qq, max(p + qq), periods)


def build_catalog(q: Quiver) -> Catalog:
    """Catalog for a quiver of extended Dynkin type."""
    qclass = validate_and_classify(q)
    if not qclass.is_tame:
        if qclass.is_dynkin:
            return build_catalog_repfinite(q, qclass)
        raise UnsupportedQuiver(f"type {qclass} is not supported")
    mats = QuiverMatrices.of(q)
    S = nonsincere_modules(q, mats)
    reg = build_regulars(q, S, mats)
    m = q.vertices
    dims = dict(reg.dims)
    triples = list(reg.triples)
    for i in range(m):
        v = mats.proj[i]
        for j in range(reg.m_thresh + reg.p[i]):
            dims[(0, i, j)] = v
            triples.append((0, i, j))
            v = _apply(mats.phi_inv, v)
        v = mats.inj[i]
        for j in range(reg.m_thresh + reg.q[i]):
            dims[(2, i, j)] = v
            triples.append((2, i, j))
            v = _apply(mats.phi, v)
        dims[(2, i, -1)] = tuple(-x for x in mats.proj[i])
        triples.append((2, i, -1))
    triples.sort()
    _check_injective(triples, dims)
    return Catalog(q, qclass, "tame", mats, triples, dims, reg.p, reg.q,
                   reg.m_thresh, S, reg.periods)


def build_catalog_repfinite(q: Quiver, qclass: Optional[QuiverClass] = None) -> Catalog:
    """Catalog for a Dynkin quiver: every preprojective plus the P_i^-."""
    qclass = qclass or validate_and_classify(q)
    if not qclass.is_dynkin:
        raise UnsupportedQuiver(f"type {qclass} is not Dynkin")
    mats = QuiverMatrices.of(q)
    m = q.vertices
    cap = _walk_cap(m)
    triples: list[Triple] = []
    dims: dict[Triple, Vec] = {}
    for i in range(m):
        v = mats.proj[i]
        r = 0
        while _nonneg(v):
            dims[(0, i, r)] = v
            triples.append((0, i, r))
            v = _apply(mats.phi_inv, v)
            r += 1
            if r > cap:
                raise OrbitOverflow(f"tau^-1 orbit of P_{i} did not terminate")
        dims[(2, i, -1)] = tuple(-x for x in mats.proj[i])
        triples.append((2, i, -1))
    triples.sort()
    _check_injective(triples, dims)
    return Catalog(q, qclass, "finite", mats, triples, dims, [0] * m, [0] * m, 0)


def make_catalog(q: Quiver) -> Catalog:
    """Pick the Dynkin or the tame construction from the quiver's type."""
    return build_catalog(q)


def _check_injective(triples: list[Triple], dims: dict[Triple, Vec]) -> None:
    seen: dict[Vec, Triple] = {}
    for t in triples:
        if t[0] == 2 and t[2] == -1:
            continue
        d = dims[t]
        if d in seen:
            raise InternalInvariantError(f"{seen[d]} and {t} share dimension vector {d}")
        seen[d] = t
