"""Walk through every stage of the pipeline on the small D~4 example.

    python demos/01_dtilde4_table.py
"""

from greenseq import build_catalog, build_prec_table, count_paths, preset, prune_to_finite
from greenseq.hasse import build_hasse, mutate, top_state
from greenseq.prec import explain

q = preset("Dtilde4-paper")
print("quiver:", q.arrows)

# The catalog: preprojectives (0,i,r), regulars (1,p,c), preinjectives (2,i,r)
# and the shifted projectives (2,i,-1).
cat = build_catalog(q)
print(f"{cat.size} candidate summands, {len(cat.S)} nonsincere dimension vectors")
print("p =", cat.p, " q =", cat.q, " m =", cat.m_thresh)

# X < Y decides whether Hom(X, tau Y) vanishes, using dimension vectors only.
for X, Y in [((0, 0, 0), (0, 0, 1)), ((0, 0, 1), (0, 0, 0))]:
    value, branch = explain(X, Y, cat)
    print(f"{X} < {Y}: {value}  [{branch}]")

table = build_prec_table(cat)
print("compatible pairs:", table.total_coexist() // 2)

A = top_state(cat)
B = mutate(A, 3, table)
print("A      =", [cat.triples[x] for x in A])
print("mu_3 A =", [cat.triples[x] for x in B])

raw = build_hasse(cat, table)
H = prune_to_finite(raw)
print("Hasse quiver before pruning:", raw.stats(), " after:", H.stats())

dist = count_paths(H)
print("length  count")
for ell, c in dist.counts.items():
    print(f"{ell:6d}  {c}")
print("total", dist.total)
