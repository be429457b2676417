"""The maximal length depends only on the underlying graph (D~ and E~ types),
and agrees for a quiver and its opposite.

    python demos/04_orientations.py
"""

from greenseq import mgs_distribution, opposite, preset, run_all_orientations

for name in ["Dtilde:4", "Dtilde:5"]:
    out = run_all_orientations(preset(name), threads=2)
    lengths = sorted({o["max_length"] for o in out["orientations"]})
    print(f"{name}: {len(out['orientations'])} orientations, maximal lengths {lengths}")

# for A~ the two cycle directions matter: n(n+1)/2 + ab with n = a+b-1
for a, b in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)]:
    n = a + b - 1
    ell = mgs_distribution(preset(f"Atilde:{a},{b}")).max_length
    print(f"A~{a},{b}: {ell}  (formula {n * (n + 1) // 2 + a * b})")

q = preset("Etilde:6")
print("E~6 and its opposite agree:", mgs_distribution(q) == mgs_distribution(opposite(q)))
