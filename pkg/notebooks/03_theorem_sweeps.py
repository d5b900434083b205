"""
Checking the theorems on every small tree
=========================================

Single-tree verdicts, an exhaustive sweep, replay of a stored
counterexample, and a seeded random sweep on larger trees.
"""

from stablecore import SweepPlan, path, replay, sweep, verify
from stablecore.theorems import summary_table

print(verify("th6", path(3)).dumps())

# every labeled tree on up to 6 vertices
records = sweep(SweepPlan("exhaustive", 2, 6))
print(summary_table(records))

# two clauses fail as stated; the stored tree reproduces the failure on its own
for r in records:
    if r.counterexample:
        print(r.theorem_id, "->", r.counterexample.clause)
        print(r.counterexample.edge_list, end="")
        print("replay:", replay(r).verdict)

# a seeded random sweep; same plan, same bytes
plan = SweepPlan("random", 60, 60, count=50, seed=7, theorems=("th6", "th7", "lem4", "even_dist"))
print(summary_table(sweep(plan)))
