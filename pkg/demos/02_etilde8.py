"""The large E~8 example: about half a million support tau-tilting modules.

Takes roughly a minute and 1 GB of memory.

    python demos/02_etilde8.py
"""

import time

from greenseq import preset, run_pipeline, sci

t = time.perf_counter()
res = run_pipeline(preset("Etilde8-paper"))
d = res.distribution

print("catalog size:", res.catalog.size)
print("Hasse quiver before pruning:", res.hasse_raw)
print("finite part:", res.hasse.stats())
for ell in (9, 10, 11):
    print(f"count({ell}) = {d[ell]}")
for ell in (389, 390):
    print(f"count({ell}) ~ {sci(d[ell])}")
print("total ~", sci(d.total), "  maximal length", d.max_length)
print("stage timings:", {k: round(v, 1) for k, v in res.timings.items()})
print(f"{time.perf_counter() - t:.1f} s")
