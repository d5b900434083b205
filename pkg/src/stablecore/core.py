"""core(T), alpha+-stability, perfect matchings, strong unique independence
and clique bonding of trees."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import (
    Forest,
    Graph,
    GraphError,
    Tree,
    bipartition,
    distance,
    distances_from,
    pendant_vertices,
)
from .stable import (
    EXACT_CAP,
    OracleCapError,
    _forest_dp,
    _require_forest,
    alpha_exact,
    is_stable,
    members_of,
    mss_masks,
)


class InconsistencyError(RuntimeError):
    """Computed quantities contradict each other; always an implementation bug."""


# -- core ------------------------------------------------------------------

def _reroot_core(order, parent, inc, exc, in_core: list[bool]) -> int:
    """Removal test for every vertex of one rooted component.

    ``alpha(F - v) = exc[v] + up_best[v]`` where ``up_best`` is the optimum of
    the component with the subtree of ``v`` cut away.  Marks ``in_core`` and
    returns the component's stability number.
    """
    root = order[0]
    alpha = max(inc[root], exc[root])
    in_core[root] = exc[root] < alpha
    up_inc = [0] * len(parent)
    up_exc = [0] * len(parent)
    for x in order[1:]:
        p = parent[x]
        ix, ex = inc[x], exc[x]
        bx = ix if ix > ex else ex
        if p == root:
            ui = inc[p] - ex
            ue = exc[p] - bx
        else:
            pi, pe = up_inc[p], up_exc[p]
            ui = inc[p] - ex + pe
            ue = exc[p] - bx + (pi if pi > pe else pe)
        up_inc[x] = ui
        up_exc[x] = ue
        in_core[x] = ex + (ui if ui > ue else ue) < alpha
    return alpha


def _core_and_alpha(adj, n: int) -> tuple[list[bool], int]:
    """Core membership flags and alpha of a forest, in linear time."""
    order, parent, roots, inc, exc = _forest_dp(adj, n)
    in_core = [False] * n
    bounds = [i for i, x in enumerate(order) if parent[x] < 0] + [n]
    total = 0
    for lo, hi in zip(bounds, bounds[1:]):
        total += _reroot_core(order[lo:hi], parent, inc, exc, in_core)
    return in_core, total


def _branch_core(adj, n: int, v: int, starts) -> tuple[list[int], int]:
    """Core and alpha of the subtree formed by ``v`` and the branches through ``starts``.

    Works on the parent tree's labels directly; no relabeled copy is built.
    """
    parent = [-1] * n
    order = [v]
    for x in starts:
        parent[x] = v
        order.append(x)
    for x in order:
        if x == v:
            continue
        px = parent[x]
        for y in adj[x]:
            if y != px:
                parent[y] = x
                order.append(y)
    inc = [1] * n
    exc = [0] * n
    for x in reversed(order):
        p = parent[x]
        if p >= 0:
            ix, ex = inc[x], exc[x]
            inc[p] += ex
            exc[p] += ix if ix > ex else ex
    parent[v] = -1
    flags = [False] * n
    alpha = _reroot_core(order, parent, inc, exc, flags)
    return [x for x in order if flags[x]], alpha


def core(f: Graph) -> frozenset[int]:
    """Intersection of all maximum stable sets of a forest.

    Uses ``v in core <=> alpha(F - v) = alpha(F) - 1``, evaluated for all
    vertices in linear time.
    """
    _require_forest(f)
    flags, _ = _core_and_alpha(f.adj, f.n)
    return frozenset(v for v in range(f.n) if flags[v])


def core_by_enumeration(g: Graph) -> frozenset[int]:
    """Oracle: intersect every enumerated maximum stable set (``n <= 24``)."""
    _, found = mss_masks(g)
    acc = (1 << g.n) - 1
    for m in found:
        acc &= m
    return frozenset(members_of(acc)) if found else frozenset()


# -- alpha+ stability ------------------------------------------------------

def is_alpha_plus_stable(g: Graph) -> bool:
    """Adding any single non-edge leaves alpha unchanged (``n <= 64``)."""
    if g.n > EXACT_CAP:
        raise OracleCapError(f"is_alpha_plus_stable is limited to n <= {EXACT_CAP}")
    a = alpha_exact(g)
    for u, v in g.non_edges():
        if alpha_exact(g.add_edge(u, v)) != a:
            return False
    return True


# -- perfect matching ------------------------------------------------------

def has_perfect_matching(t: Graph) -> tuple[bool, tuple[tuple[int, int], ...] | None]:
    """Greedy leaf matching on a forest.

    A pendant vertex can only be matched to its neighbor, so repeatedly
    matching leaves and deleting both ends is exact.  The witness is sorted.
    """
    _require_forest(t)
    n = t.n
    if n % 2:
        return False, None
    deg = [len(a) for a in t.adj]
    matched = [False] * n
    if 0 in deg:
        return False, None
    leaves = deque(v for v in range(n) if deg[v] == 1)
    pairs = []
    while leaves:
        u = leaves.popleft()
        if matched[u]:
            continue
        w = next((y for y in t.adj[u] if not matched[y]), None)
        if w is None:
            return False, None
        matched[u] = matched[w] = True
        pairs.append((min(u, w), max(u, w)))
        for y in t.adj[w]:
            if not matched[y]:
                deg[y] -= 1
                if deg[y] == 0:
                    return False, None
                if deg[y] == 1:
                    leaves.append(y)
    if not all(matched):
        return False, None
    return True, tuple(sorted(pairs))


# -- strong unique independence --------------------------------------------

@dataclass(frozen=True)
class SUIConditions:
    """The three characterizations, each computed on its own."""

    unique_mss_cobipartite: bool
    pendants_in_one_class: bool
    pendant_distances_even: bool

    @property
    def agree(self) -> bool:
        return self.unique_mss_cobipartite == self.pendants_in_one_class == self.pendant_distances_even

    def to_json(self) -> dict:
        return {
            "i_unique_mss": self.unique_mss_cobipartite,
            "ii_pendants_one_class": self.pendants_in_one_class,
            "iii_pendant_distances_even": self.pendant_distances_even,
        }


def _unique_mss_cobipartite(t: Tree) -> bool:
    n = t.n
    if n <= 16:
        _, found = mss_masks(t)
        if len(found) != 1:
            return False
        s = found[0]
    else:
        flags, alpha = _core_and_alpha(t.adj, n)
        c = [v for v in range(n) if flags[v]]
        # core of size alpha is itself the only maximum stable set
        if len(c) != alpha:
            return False
        s = sum(1 << v for v in c)
    rest = ((1 << n) - 1) & ~s
    return is_stable(t, members_of(rest))


def _pendant_distances_even(t: Tree) -> bool:
    pend = sorted(pendant_vertices(t))
    if len(pend) <= 40:
        return all(distance(t, u, v) % 2 == 0 for u, v in combinations(pend, 2))
    # parity is additive along a tree, so checking against one pendant suffices
    d = distances_from(t, pend[0])
    return all(d[v] % 2 == 0 for v in pend)


def is_strong_unique_independence(t: Tree) -> tuple[bool, SUIConditions]:
    """Whether ``t`` has a unique maximum stable set whose complement is stable.

    Returns the conjunction of the three conditions plus the record of each.
    """
    t = t.as_tree()
    bip = bipartition(t)
    pend = pendant_vertices(t)
    cond = SUIConditions(
        unique_mss_cobipartite=_unique_mss_cobipartite(t),
        pendants_in_one_class=pend <= bip.class_a or pend <= bip.class_b,
        pendant_distances_even=_pendant_distances_even(t),
    )
    return cond.unique_mss_cobipartite and cond.pendants_in_one_class and cond.pendant_distances_even, cond


# -- clique bonding --------------------------------------------------------

def clique_bond(t1: Tree, v1: int, t2: Tree, v2: int) -> tuple[Tree, tuple[int, ...], tuple[int, ...]]:
    """Glue two trees by identifying ``v1`` with ``v2``.

    ``t1`` keeps its labels; the other vertices of ``t2`` follow in order.
    Returns the bonded tree and, for each input, a tuple mapping its labels
    to labels in the result.
    """
    t1.check_vertex(v1)
    t2.check_vertex(v2)
    map2 = []
    nxt = t1.n
    for x in range(t2.n):
        if x == v2:
            map2.append(v1)
        else:
            map2.append(nxt)
            nxt += 1
    edges = list(t1.edges) + [(map2[a], map2[b]) for a, b in t2.edges]
    return Tree(nxt, edges), tuple(range(t1.n)), tuple(map2)


@dataclass(frozen=True)
class BondingSplit:
    """``T = t1 * v * t2``; ``map1``/``map2`` send local labels to labels of ``T``."""

    bond_vertex: int
    t1: Tree
    t2: Tree
    map1: tuple[int, ...]
    map2: tuple[int, ...]

    def local_bond(self) -> tuple[int, int]:
        return self.map1.index(self.bond_vertex), self.map2.index(self.bond_vertex)


def _side(t: Graph, v: int, starts: Iterable[int]) -> tuple[Tree, tuple[int, ...]]:
    """Subtree made of ``v`` and everything reachable through ``starts``, relabeled in label order."""
    adj = t.adj
    seen = [False] * t.n
    seen[v] = True
    stack = list(starts)
    edges = []
    for x in stack:
        seen[x] = True
        edges.append((v, x))
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                stack.append(y)
                edges.append((x, y))
    verts = [x for x in range(t.n) if seen[x]]
    local = [0] * t.n
    for i, x in enumerate(verts):
        local[x] = i
    return Tree(len(verts), [(local[a], local[b]) for a, b in edges]), tuple(verts)


def split_at(t: Tree, v: int, neighbor_part: tuple[Iterable[int], Iterable[int]]) -> BondingSplit:
    """Undo a clique bonding at ``v`` along a two-block partition of ``N(v)``."""
    t.check_vertex(v)
    nb = set(t.adj[v])
    if len(nb) < 2:
        raise GraphError(f"vertex {v} has degree {len(nb)}; splitting needs degree >= 2")
    b1, b2 = (set(b) for b in neighbor_part)
    if not b1 or not b2:
        raise GraphError("both neighbor blocks must be non-empty")
    if b1 & b2 or (b1 | b2) != nb:
        raise GraphError("blocks must partition the neighborhood of the split vertex")
    t1, m1 = _side(t, v, b1)
    t2, m2 = _side(t, v, b2)
    return BondingSplit(v, t1, t2, m1, m2)


def canonical_split(t: Tree, v: int) -> BondingSplit:
    """Split with the smallest neighbor of ``v`` alone in the first block."""
    nb = t.adj[v]
    return split_at(t, v, (nb[:1], nb[1:]))


# -- per-tree report -------------------------------------------------------

@dataclass(frozen=True)
class CoreReport:
    n: int
    alpha: int
    core: frozenset[int]
    pend: frozenset[int]
    core_pend: frozenset[int]
    has_perfect_matching: bool
    alpha_plus_stable: bool
    strong_unique: bool
    bipartition_sizes: tuple[int, int]
    core_pend_distance_parities: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "core": sorted(self.core),
            "pend": sorted(self.pend),
            "core_pend": sorted(self.core_pend),
            "has_perfect_matching": self.has_perfect_matching,
            "alpha_plus_stable": self.alpha_plus_stable,
            "strong_unique": self.strong_unique,
            "bipartition_sizes": list(self.bipartition_sizes),
            "core_pend_distance_parities": list(self.core_pend_distance_parities),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(", ", ": "))


def core_pendant_report(t: Tree) -> CoreReport:
    """Every quantity the no-perfect-matching characterization relates.

    ``alpha_plus_stable`` is computed from its definition when ``n <= 64``;
    larger trees use the elementary fact that ``alpha(G + uv) < alpha(G)``
    exactly when ``u`` and ``v`` are both in the core.
    ``core_pend_distance_parities`` holds the sorted pairwise distances inside
    ``core_pend``.
    """
    t = t.as_tree()
    n = t.n
    flags, alpha = _core_and_alpha(t.adj, n)
    c = frozenset(v for v in range(n) if flags[v])
    pend = pendant_vertices(t)
    cp = c & pend
    pm, _ = has_perfect_matching(t)
    if n <= EXACT_CAP:
        aplus = is_alpha_plus_stable(t)
    else:
        aplus = not any(not t.has_edge(u, v) for u, v in combinations(sorted(c), 2))
    sui, _ = is_strong_unique_independence(t)
    dists = sorted(distance(t, u, v) for u, v in combinations(sorted(cp), 2))
    rep = CoreReport(n, alpha, c, pend, cp, pm, aplus, sui, bipartition(t).sizes, tuple(dists))
    _check_report(rep)
    return rep


def _check_report(r: CoreReport) -> None:
    big = 2 * r.alpha > r.n
    facts = {
        "alpha > n/2": big,
        "no perfect matching": not r.has_perfect_matching,
        "|core & pend| >= 2": len(r.core_pend) >= 2,
        "core non-empty": bool(r.core),
    }
    if len(set(facts.values())) != 1:
        raise InconsistencyError(f"perfect-matching equivalences disagree: {facts}")
    if r.alpha_plus_stable != (not r.core):
        raise InconsistencyError("alpha+-stability disagrees with an empty core")
    if r.core_pend != r.core & r.pend:
        raise InconsistencyError("core_pend is not core & pend")


def find_even_core_pendant_pair(t: Tree) -> tuple[int, int] | None:
    """Two core pendant vertices at even distance, or ``None`` if ``alpha = n/2``.

    Pairs are tried in lexicographic order.
    """
    t = t.as_tree()
    flags, alpha = _core_and_alpha(t.adj, t.n)
    if 2 * alpha <= t.n:
        return None
    cp = sorted(v for v in pendant_vertices(t) if flags[v])
    for u, v in combinations(cp, 2):
        if distance(t, u, v) % 2 == 0:
            return u, v
    return None
