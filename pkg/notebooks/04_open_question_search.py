"""
Pendant vertices shared by maximal stable sets of a fixed size
==============================================================

For each tree, intersect all maximal stable sets of size k and count the
pendant vertices left.  Trees with at most one are listed; the data is not
read as an answer either way.
"""

from stablecore import SweepPlan, open_problem_search, path
from stablecore.search import pendants_in_k_intersection

# P4 with k = 2: {0,2}, {0,3}, {1,3} share nothing
print(pendants_in_k_intersection(path(4), 2))

plan = SweepPlan("exhaustive", 2, 7)
for rule in ("half_n", "min_bipartition"):
    rep = open_problem_search(rule, plan, max_candidates=3)
    print(rep.table())
    for c in rep.candidates:
        print(f"  k={c.k} pendants={list(c.pendants)} sets={c.sets}:", c.edge_list.replace("\n", "; "))
