"""End-to-end drivers: quiver -> catalog -> precedence table -> Hasse quiver -> counts."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .catalog import Catalog, build_catalog
from .count import LengthDistribution, count_paths, sci, topo_sort
from .errors import CyclicQuiver, MismatchFound, TooManyOrientations, UnsupportedQuiver
from .hasse import HasseGraph, build_hasse, check_states, prune_to_finite
from .oracle import enumerate_mgs
from .prec import PrecTable, build_prec_table
from .quiver import Quiver, QuiverClass, validate_and_classify

log = logging.getLogger(__name__)


@dataclass
class PipelineResult:
    quiver: Quiver
    qclass: QuiverClass
    catalog: Catalog
    table: PrecTable
    hasse_raw: dict
    hasse: HasseGraph
    distribution: LengthDistribution
    timings: dict = field(default_factory=dict)

    @property
    def max_length(self) -> int:
        return self.distribution.max_length


def run_pipeline(q: Quiver, debug: bool = False) -> PipelineResult:
    """Build every stage for ``q`` and count its maximal green sequences.

    With ``debug`` every Hasse vertex is re-checked for pairwise compatibility.
    """
    timings = {}
    t0 = time.perf_counter()
    qclass = validate_and_classify(q)
    if not (qclass.is_dynkin or qclass.is_tame):
        raise UnsupportedQuiver(f"type {qclass} is not supported")
    cat = build_catalog(q)
    timings["catalog"] = time.perf_counter() - t0

    t = time.perf_counter()
    table = build_prec_table(cat)
    timings["prec"] = time.perf_counter() - t

    t = time.perf_counter()
    raw = build_hasse(cat, table)
    raw_stats = raw.stats()
    H = prune_to_finite(raw)
    del raw
    timings["hasse"] = time.perf_counter() - t
    if debug:
        check_states(H, table)

    t = time.perf_counter()
    order = topo_sort(H)
    dist = count_paths(H, order)
    timings["count"] = time.perf_counter() - t
    log.info("%s: %s, H_fin %s, l=%s", q.name, qclass, H.stats(), dist.max_length)
    return PipelineResult(q, qclass, cat, table, raw_stats, H, dist, timings)


def mgs_distribution(q: Quiver) -> LengthDistribution:
    return run_pipeline(q).distribution


def report(res: PipelineResult) -> dict:
    d = res.distribution
    return {
        "type": str(res.qclass),
        "hasse": res.hasse.stats(),
        "counts": {str(k): str(v) for k, v in d.counts.items()},
        "total": str(d.total),
        "total_sci": sci(d.total),
        "min_length": d.min_length,
        "max_length": d.max_length,
        "no_gap": d.no_gap,
    }


def run_count(q: Quiver) -> dict:
    return report(run_pipeline(q))


# ---------------------------------------------------------------------------
# orientation sweep


def orientations(q: Quiver, max_edges: int = 12):
    """Yield ``(mask, quiver)`` for every acyclic orientation of ``q``'s graph.

    Bit ``e`` of ``mask`` reverses the ``e``-th arrow of ``q``.
    """
    arrows = q.arrows
    if len(arrows) > max_edges:
        raise TooManyOrientations(f"{len(arrows)} edges exceed the cap of {max_edges}")
    for mask in range(1 << len(arrows)):
        new = tuple((t, s) if mask >> e & 1 else (s, t) for e, (s, t) in enumerate(arrows))
        cand = Quiver(q.vertices, new, f"{q.name}#{mask}")
        try:
            validate_and_classify(cand)
        except CyclicQuiver:
            continue
        yield mask, cand


def _orientation_length(item):
    mask, q = item
    return mask, run_pipeline(q).max_length


def run_all_orientations(q: Quiver, max_edges: int = 12, threads: int = 1) -> dict:
    """Maximal length for every acyclic orientation, in bitmask order."""
    items = list(orientations(q, max_edges))
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(_orientation_length, items))
    else:
        results = [_orientation_length(it) for it in items]
    lengths = {mask: ell for mask, ell in results}
    values = set(lengths.values())
    return {
        "orientations": [
            {"mask": mask, "arrows": [list(a) for a in oq.arrows], "max_length": lengths[mask]}
            for mask, oq in items
        ],
        "constant": len(values) == 1,
        "max_length": values.pop() if len(values) == 1 else None,
    }


# ---------------------------------------------------------------------------
# oracle cross-check


def run_oracle_check(q: Quiver, max_len: Optional[int] = None) -> dict:
    """Compare the Hasse-quiver counts with brute-force framed-quiver mutation.

    Raises MismatchFound when the distributions differ.
    """
    dp = mgs_distribution(q)
    cap = dp.max_length if max_len is None else max_len
    brute = enumerate_mgs(q, cap)
    diff = dp.diff(brute)
    out = {
        "max_len": cap,
        "equal": not diff,
        "total": str(dp.total),
        "diff": {str(k): [str(a), str(b)] for k, (a, b) in diff.items()},
    }
    if diff:
        raise MismatchFound(out)
    return out
