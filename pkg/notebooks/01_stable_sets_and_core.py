"""
Stable sets and the core of a tree
==================================

Maximum stable sets of small paths, the core as their intersection, and the
linear-time removal test that replaces enumeration on large trees.
"""

from stablecore import (
    alpha_exact,
    alpha_forest,
    core,
    core_pendant_report,
    enumerate_mss,
    max_stable_set,
    path,
    random_tree,
)
from stablecore.core import core_by_enumeration

# P4 has three maximum stable sets and nothing is common to all of them
omega = enumerate_mss(path(4))
print("P4 maximum stable sets:", [list(s) for s in omega.witnesses])
print("intersection:", sorted(omega.intersection()))

# P3 has exactly one, so the core is that set
print("core(P3) =", sorted(core(path(3))))

# three ways to get alpha agree
t = random_tree(18, seed=4)
print("alpha: tree DP", alpha_forest(t), "| branch and bound", alpha_exact(t), "| enumeration", enumerate_mss(t).alpha)

# removal test versus intersecting every maximum stable set
print("core agrees with enumeration:", core(t) == core_by_enumeration(t))

# large trees only go through the DP
big = random_tree(5000, seed=1)
s = max_stable_set(big)
print(f"n=5000: alpha={len(s)}, |core|={len(core(big))}")

# the per-tree report collects everything at once
print(core_pendant_report(path(5)).dumps())
