"""Exploratory search for the open question on pendant vertices shared by all
maximal stable sets of a prescribed size.

For every tree the search intersects all maximal stable sets of size ``k``
and counts the pendant vertices left in the intersection.  Trees where that
count is at most one are kept as candidates; nothing is concluded from them.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .formats import to_edge_list
from .graph import Tree, bipartition, pendant_vertices
from .stable import mask_of, maximal_stable_masks, members_of
from .theorems import SweepPlan

K_RULES = ("half_n", "min_bipartition")


def normalize_k_rule(rule: str) -> str:
    r = rule.replace("-", "_")
    if r not in K_RULES:
        raise ValueError(f"unknown k rule {rule!r}; choose half_n or min_bipartition")
    return r


def k_for(t: Tree, k_rule: str) -> int | None:
    """Target size, or ``None`` when ``half_n`` meets an odd order."""
    if normalize_k_rule(k_rule) == "half_n":
        return t.n // 2 if t.n % 2 == 0 else None
    return min(bipartition(t).sizes)


def pendants_in_k_intersection(t: Tree, k: int) -> tuple[frozenset[int], int] | None:
    """Pendant vertices common to all maximal stable sets of size ``k``.

    Returns ``(pendants, number_of_sets)``, or ``None`` when no maximal stable
    set has size ``k``.
    """
    sets = [m for m in maximal_stable_masks(t) if m.bit_count() == k]
    if not sets:
        return None
    acc = mask_of(pendant_vertices(t))
    for m in sets:
        acc &= m
    return frozenset(members_of(acc)), len(sets)


@dataclass(frozen=True)
class Candidate:
    edge_list: str
    k: int
    pendants: tuple[int, ...]
    sets: int

    def to_json(self) -> dict:
        return {"edge_list": self.edge_list, "k": self.k, "pendants": list(self.pendants), "maximal_sets": self.sets}


@dataclass(frozen=True)
class SearchReport:
    k_rule: str
    trees_examined: int
    trees_skipped: int
    trees_without_sets: int
    distribution: tuple[tuple[int, int], ...]
    candidates_total: int
    candidates: tuple[Candidate, ...]

    @property
    def min_count(self) -> int | None:
        return self.distribution[0][0] if self.distribution else None

    def to_json(self) -> dict:
        return {
            "k_rule": self.k_rule,
            "trees_examined": self.trees_examined,
            "trees_skipped_odd_n": self.trees_skipped,
            "trees_without_maximal_set_of_size_k": self.trees_without_sets,
            "min_pendant_count": self.min_count,
            "distribution": {str(c): m for c, m in self.distribution},
            "candidates_total": self.candidates_total,
            "candidates": [c.to_json() for c in self.candidates],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def table(self) -> str:
        rows = [f"k rule: {self.k_rule}", f"{'pendants':>8}  {'trees':>8}"]
        rows += [f"{c:>8}  {m:>8}" for c, m in self.distribution]
        rows.append(
            f"examined {self.trees_examined}, skipped {self.trees_skipped}, "
            f"no size-k maximal set {self.trees_without_sets}, count <= 1: {self.candidates_total}"
        )
        return "\n".join(rows) + "\n"


def open_problem_search(k_rule: str, plan: SweepPlan, max_candidates: int | None = None) -> SearchReport:
    """Pendant-count distribution over the trees of ``plan``.

    ``max_candidates`` caps how many count <= 1 trees are stored (all of them
    by default); ``candidates_total`` always counts every one.
    """
    rule = normalize_k_rule(k_rule)
    dist: Counter[int] = Counter()
    examined = skipped = no_sets = total = 0
    kept: list[Candidate] = []
    for t in plan.trees():
        k = k_for(t, rule)
        if k is None:
            skipped += 1
            continue
        res = pendants_in_k_intersection(t, k)
        if res is None:
            no_sets += 1
            continue
        examined += 1
        pend, nsets = res
        dist[len(pend)] += 1
        if len(pend) <= 1:
            total += 1
            if max_candidates is None or len(kept) < max_candidates:
                kept.append(Candidate(to_edge_list(t), k, tuple(sorted(pend)), nsets))
    return SearchReport(rule, examined, skipped, no_sets, tuple(sorted(dist.items())), total, tuple(kept))
