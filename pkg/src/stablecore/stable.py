"""Stable (independent) sets: tree DP, an exact small-graph solver and
enumeration oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import Forest, Graph, GraphError, pendant_vertices

ENUM_CAP = 24
ALL_STABLE_CAP = 12
EXACT_CAP = 64


class OracleCapError(ValueError):
    """Input is larger than an exponential-time routine is allowed to handle."""


def _require_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise OracleCapError(f"{what} is limited to n <= {cap}, got n = {g.n}")


def _require_forest(g: Graph) -> None:
    if not isinstance(g, Forest) and not g.is_acyclic():
        raise GraphError("cycle found: input must be a forest")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class StableSet:
    """A vertex set certified pairwise non-adjacent in ``host``."""

    host: Graph = field(repr=False)
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for v in self.members:
            self.host.check_vertex(v)
        if not is_stable(self.host, self.members):
            raise GraphError(f"{sorted(self.members)} is not stable")

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v) -> bool:
        return v in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def to_json(self) -> dict:
        return {"alpha": len(self.members), "members": sorted(self.members)}


@dataclass(frozen=True)
class OmegaSample:
    """Maximum stable sets of a graph; ``complete`` means nothing was cut off."""

    alpha: int
    witnesses: tuple[StableSet, ...]
    complete: bool

    def intersection(self) -> frozenset[int]:
        if not self.complete:
            raise ValueError("intersection of an incomplete sample is not the core")
        if not self.witnesses:
            return frozenset()
        out = self.witnesses[0].members
        for s in self.witnesses[1:]:
            out = out & s.members
        return out


def is_stable(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    return all(not (g.masks[v] & m) for v in members_of(m))


def is_maximal_stable(g: Graph, s: Iterable[int]) -> bool:
    """Stable, and every vertex outside ``s`` has a neighbor in ``s``."""
    m = mask_of(s)
    if not is_stable(g, members_of(m)):
        return False
    return all(m >> v & 1 or g.masks[v] & m for v in range(g.n))


# -- tree dynamic programming ----------------------------------------------

def _rooted_order(adj, n: int) -> tuple[list[int], list[int], list[int]]:
    """BFS order of every component (rooted at its smallest label) and parents."""
    parent = [-1] * n
    seen = [False] * n
    order: list[int] = []
    roots = []
    for r in range(n):
        if seen[r]:
            continue
        roots.append(r)
        seen[r] = True
        i = len(order)
        order.append(r)
        while i < len(order):
            x = order[i]
            i += 1
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    order.append(y)
    return order, parent, roots


def _forest_dp(adj, n: int):
    """Per-vertex subtree optima with the vertex in (``inc``) or out (``exc``)."""
    order, parent, roots = _rooted_order(adj, n)
    inc = [1] * n
    exc = [0] * n
    for x in reversed(order):
        p = parent[x]
        if p >= 0:
            ix, ex = inc[x], exc[x]
            inc[p] += ex
            exc[p] += ix if ix > ex else ex
    return order, parent, roots, inc, exc


def _alpha_adj(adj, n: int) -> int:
    _, _, roots, inc, exc = _forest_dp(adj, n)
    return sum(max(inc[r], exc[r]) for r in roots)


def alpha_forest(f: Graph) -> int:
    """Stability number of a forest in linear time."""
    _require_forest(f)
    return _alpha_adj(f.adj, f.n)


def max_stable_set(f: Graph) -> StableSet:
    """One maximum stable set of a forest.

    Deterministic: each component is rooted at its smallest label and, on
    ties, a vertex is taken rather than skipped.
    """
    _require_forest(f)
    order, parent, _, inc, exc = _forest_dp(f.adj, f.n)
    taken = [False] * f.n
    for x in order:
        p = parent[x]
        if (p < 0 or not taken[p]) and inc[x] >= exc[x]:
            taken[x] = True
    return StableSet(f, frozenset(v for v in range(f.n) if taken[v]))


# -- exact solver for small general graphs ---------------------------------

def _mis_size(masks, cand: int) -> int:
    best = 0

    def rec(cand: int, size: int) -> None:
        nonlocal best
        while True:
            if not cand:
                if size > best:
                    best = size
                return
            if size + cand.bit_count() <= best:
                return
            pivot, dmax, c = -1, -1, cand
            while c:
                low = c & -c
                v = low.bit_length() - 1
                c ^= low
                d = (masks[v] & cand).bit_count()
                if d <= 1:
                    # a vertex of degree <= 1 lies in some maximum stable set
                    cand &= ~(masks[v] | low)
                    size += 1
                    break
                if d > dmax:
                    dmax, pivot = d, v
            else:
                break
        bit = 1 << pivot
        rec(cand & ~(masks[pivot] | bit), size + 1)
        rec(cand & ~bit, size)

    rec(cand, 0)
    return best


def alpha_exact(g: Graph) -> int:
    """Stability number of an arbitrary simple graph (branch and bound, ``n <= 64``)."""
    _require_cap(g, EXACT_CAP, "alpha_exact")
    return _mis_size(g.masks, (1 << g.n) - 1)


# -- enumeration oracles ---------------------------------------------------

def _stable_masks_of_size(masks, n: int, size: int, limit: int | None = None) -> tuple[list[int], bool]:
    """Stable sets of exactly ``size`` vertices, lexicographic; second item is completeness."""
    out: list[int] = []
    truncated = False

    def rec(cand: int, chosen: int, need: int) -> bool:
        nonlocal truncated
        if need == 0:
            if limit is not None and len(out) >= limit:
                truncated = True
                return False
            out.append(chosen)
            return True
        c = cand
        while c and c.bit_count() >= need:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            if not rec(c & ~masks[v], chosen | low, need - 1):
                return False
        return True

    rec((1 << n) - 1, 0, size)
    return out, not truncated


def enumerate_mss(g: Graph, cap: int | None = None) -> OmegaSample:
    """All maximum stable sets in lexicographic order (``n <= 24``).

    With ``cap``, at most ``cap`` witnesses are kept and ``complete`` tells
    whether that was all of them.
    """
    _require_cap(g, ENUM_CAP, "enumerate_mss")
    alpha = alpha_exact(g)
    found, complete = _stable_masks_of_size(g.masks, g.n, alpha, cap)
    return OmegaSample(alpha, tuple(StableSet(g, frozenset(members_of(m))) for m in found), complete)


def mss_masks(g: Graph) -> tuple[int, list[int]]:
    """``(alpha, bitmasks of every maximum stable set)``; oracle fast path."""
    _require_cap(g, ENUM_CAP, "mss_masks")
    alpha = alpha_exact(g)
    return alpha, _stable_masks_of_size(g.masks, g.n, alpha)[0]


def stable_set_masks(g: Graph, min_size: int = 0) -> list[int]:
    """Every stable set with at least ``min_size`` members (``n <= 12``)."""
    _require_cap(g, ALL_STABLE_CAP, "stable_set_masks")
    out: list[int] = []
    masks = g.masks

    def rec(cand: int, chosen: int, size: int) -> None:
        if size >= min_size:
            out.append(chosen)
        c = cand
        while c and size + c.bit_count() >= min_size:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            rec(c & ~masks[v], chosen | low, size + 1)

    rec((1 << g.n) - 1, 0, 0)
    return out


def maximal_stable_masks(g: Graph) -> list[int]:
    """Bitmasks of all maximal stable sets, sorted lexicographically by members."""
    _require_cap(g, ENUM_CAP, "maximal stable set enumeration")
    masks = g.masks
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                out.append(r)
            return
        # pivot on the vertex of P|X with the most non-neighbors in P
        best_u, best_k, c = -1, -1, p | x
        while c:
            low = c & -c
            u = low.bit_length() - 1
            c ^= low
            k = (p & ~masks[u] & ~low).bit_count()
            if k > best_k:
                best_k, best_u = k, u
        branch = p & (masks[best_u] | (1 << best_u))
        while branch:
            low = branch & -branch
            v = low.bit_length() - 1
            branch ^= low
            keep = ~(masks[v] | low)
            bk(r | low, p & keep, x & keep)
            p &= ~low
            x |= low

    bk(0, (1 << g.n) - 1, 0)
    out.sort(key=members_of)
    return out


def enumerate_maximal_stable_sets(g: Graph, size_filter: int | None = None) -> list[StableSet]:
    found = maximal_stable_masks(g)
    if size_filter is not None:
        found = [m for m in found if m.bit_count() == size_filter]
    return [StableSet(g, frozenset(members_of(m))) for m in found]


# -- pendant exchange ------------------------------------------------------

def extend_pendant_stable_set(t: Graph, a: Iterable[int]) -> StableSet:
    """A maximum stable set containing the stable pendant set ``a``.

    Starts from :func:`max_stable_set` and, for each missing pendant of ``a``
    in increasing order, swaps it in for its unique neighbor.
    """
    a = frozenset(a)
    pend = pendant_vertices(t)
    if not a <= pend:
        raise GraphError(f"vertices {sorted(a - pend)} are not pendant")
    if not is_stable(t, a):
        raise GraphError(f"{sorted(a)} is not stable")
    s = set(max_stable_set(t).members)
    swaps = 0
    for u in sorted(a - s):
        if u in s:
            continue
        (w,) = t.adj[u]
        # otherwise s | {u} would be a larger stable set
        assert w in s and w not in a, "exchange invariant broken"
        s.discard(w)
        s.add(u)
        swaps += 1
    assert swaps <= len(a)
    assert a <= s
    return StableSet(t, frozenset(s))
