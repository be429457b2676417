"""Compare the Hasse-quiver counts with plain framed-quiver mutation.

The oracle knows nothing about modules: it mutates the framed exchange
matrix at green vertices until none is left.

    python demos/03_oracle_crosscheck.py
"""

from greenseq import enumerate_mgs, framed, green_vertices, ice_mutate, mgs_distribution, preset

q = preset("A:2")
R = framed(q)
print("framed A2:\n", R.B)
R = ice_mutate(R, 0)
print("after mutating at 0:\n", R.B, "\ngreen:", green_vertices(R))

for name in ["A:3", "D:4", "Atilde:2,1", "Atilde:2,2", "Dtilde4-paper"]:
    q = preset(name)
    dp = mgs_distribution(q)
    brute = enumerate_mgs(q, dp.max_length)
    print(f"{name:14s} max length {dp.max_length:3d}  total {dp.total:8d}  oracle agrees: {brute == dp}")
