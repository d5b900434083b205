"""Labeled simple graphs, trees and forests on the vertex set ``0..n-1``.

All objects are immutable.  Constructors validate their invariants, so a
:class:`Tree` in hand is always connected and acyclic with at least two
vertices.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from heapq import heapify, heappop, heappush
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised when a graph violates a structural invariant."""


def _normalize_edges(n: int, edges: Iterable[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    out = []
    for u, v in edges:
        if u > v:
            u, v = v, u
        if u < 0 or v >= n:
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        out.append((u, v))
    out.sort()
    for i in range(1, len(out)):
        if out[i] == out[i - 1]:
            raise GraphError(f"duplicate edge {out[i]}")
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with vertices ``0..n-1``.

    ``edges`` is stored as a sorted tuple of pairs ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = _normalize_edges(n, edges)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", norm)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            nbrs[u].append(v)
            nbrs[v].append(u)
        # edges are sorted, so every neighbor list is already increasing
        object.__setattr__(self, "adj", tuple(map(tuple, nbrs)))
        self._validate()

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood of every vertex as a bitmask."""
        return tuple(sum(1 << w for w in a) for a in self.adj)

    def _validate(self) -> None:
        pass

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} outside [0, {self.n})")

    def add_edge(self, u: int, v: int) -> Graph:
        """Return ``G + uv`` as a plain :class:`Graph`."""
        return Graph(self.n, self.edges + ((u, v),))

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.masks[u] >> v & 1]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(_bfs_order(self.adj, 0)) == self.n

    def is_acyclic(self) -> bool:
        return _find_cycle_edge(self.n, self.edges) is None

    def as_forest(self) -> Forest:
        return self if isinstance(self, Forest) else Forest(self.n, self.edges)

    def as_tree(self) -> Tree:
        return self if isinstance(self, Tree) else Tree(self.n, self.edges)


class Forest(Graph):
    """Acyclic graph; isolated vertices are allowed."""

    def _validate(self) -> None:
        bad = _find_cycle_edge(self.n, self.edges)
        if bad is not None:
            raise GraphError(f"cycle found through edge {bad}")


class Tree(Forest):
    """Connected acyclic graph of order at least two."""

    def _validate(self) -> None:
        if self.n < 2:
            raise GraphError("a tree needs at least two vertices")
        # n - 1 edges and connected implies acyclic
        if len(self.edges) != self.n - 1 or not self.is_connected():
            super()._validate()
            raise GraphError("disconnected: a tree must be connected")


def _find_cycle_edge(n: int, edges) -> tuple[int, int] | None:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return (u, v)
        parent[ru] = rv
    return None


def _bfs_order(adj, root: int) -> list[int]:
    seen = [False] * len(adj)
    seen[root] = True
    order = [root]
    for x in order:
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                order.append(y)
    return order


@dataclass(frozen=True)
class Bipartition:
    """Color classes of a connected bipartite graph; ``class_a`` holds vertex 0."""

    class_a: frozenset[int]
    class_b: frozenset[int]

    @property
    def sizes(self) -> tuple[int, int]:
        return len(self.class_a), len(self.class_b)

    def same_class(self, u: int, v: int) -> bool:
        return (u in self.class_a) == (v in self.class_a)


# -- basic operations -------------------------------------------------------

def pendant_vertices(g: Graph) -> frozenset[int]:
    """Vertices of degree exactly one."""
    return frozenset(v for v in range(g.n) if len(g.adj[v]) == 1)


def bipartition(t: Graph) -> Bipartition:
    """BFS 2-coloring from vertex 0.

    Raises :class:`GraphError` on disconnected or non-bipartite input.
    """
    if t.n == 0:
        raise GraphError("empty graph has no bipartition")
    color = [-1] * t.n
    color[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in t.adj[x]:
            if color[y] < 0:
                color[y] = 1 - color[x]
                queue.append(y)
            elif color[y] == color[x]:
                raise GraphError("odd cycle: graph is not bipartite")
    if -1 in color:
        raise GraphError("disconnected: bipartition needs a connected graph")
    a = frozenset(v for v in range(t.n) if color[v] == 0)
    return Bipartition(a, frozenset(range(t.n)) - a)


def distances_from(g: Graph, source: int) -> list[int]:
    """BFS distances from ``source``; unreachable vertices get ``-1``."""
    g.check_vertex(source)
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for y in g.adj[x]:
            if dist[y] < 0:
                dist[y] = d
                queue.append(y)
    return dist


def distance(t: Graph, u: int, v: int) -> int:
    t.check_vertex(u)
    t.check_vertex(v)
    if u == v:
        return 0
    d = distances_from(t, u)[v]
    if d < 0:
        raise GraphError(f"vertices {u} and {v} are not connected")
    return d


def spider(k: int) -> Tree:
    """Hub ``0`` joined to ``1..k``; leg ``i`` continues to the leaf ``i + k``."""
    if k < 1:
        raise GraphError("spider needs k >= 1")
    edges = [(0, i) for i in range(1, k + 1)] + [(i, i + k) for i in range(1, k + 1)]
    return Tree(2 * k + 1, edges)


def path(n: int) -> Graph:
    """Chordless path ``0-1-...-(n-1)``; a :class:`Tree` when ``n >= 2``."""
    edges = [(i, i + 1) for i in range(n - 1)]
    return Tree(n, edges) if n >= 2 else Forest(n, edges)


def star(k: int) -> Tree:
    """``K_{1,k}`` with center ``0``."""
    return Tree(k + 1, [(0, i) for i in range(1, k + 1)])


# -- Prüfer sequences -------------------------------------------------------

def prufer_decode(seq: Sequence[int], n: int | None = None) -> Tree:
    """Labeled tree on ``len(seq) + 2`` vertices with Prüfer sequence ``seq``."""
    if n is None:
        n = len(seq) + 2
    elif n != len(seq) + 2:
        raise GraphError(f"a Prüfer sequence for n={n} has length {n - 2}, got {len(seq)}")
    if n < 2:
        raise GraphError("n must be at least 2")
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise GraphError(f"Prüfer entry {x} outside [0, {n})")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapify(leaves)
    edges = []
    for x in seq:
        leaf = heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heappush(leaves, x)
    edges.append((heappop(leaves), heappop(leaves)))
    return Tree(n, edges)


def prufer_encode(t: Tree) -> tuple[int, ...]:
    n = t.n
    degree = [len(a) for a in t.adj]
    removed = [False] * n
    leaves = [v for v in range(n) if degree[v] == 1]
    heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heappop(leaves)
        removed[leaf] = True
        for y in t.adj[leaf]:
            if not removed[y]:
                seq.append(y)
                degree[y] -= 1
                if degree[y] == 1:
                    heappush(leaves, y)
                break
    return tuple(seq)


def random_tree(n: int, seed: int) -> Tree:
    """Uniform labeled tree from a random Prüfer sequence.

    Entries are drawn with :class:`random.Random` (MT19937) seeded by ``seed``,
    one ``randrange(n)`` call per position.
    """
    if n < 2:
        raise GraphError("random_tree needs n >= 2")
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


# -- subgraphs --------------------------------------------------------------

def remove_vertices(g: Graph, w: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``G - W`` with labels compacted; returns the graph and the old->new map."""
    drop = set(w)
    for v in drop:
        g.check_vertex(v)
    keep = [v for v in range(g.n) if v not in drop]
    relabel = {old: new for new, old in enumerate(keep)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    cls = Forest if isinstance(g, Forest) else Graph
    return cls(len(keep), edges), relabel


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    keep = set(vertices)
    return remove_vertices(g, [v for v in range(g.n) if v not in keep])


def connected_components(g: Graph) -> list[tuple[Graph, dict[int, int]]]:
    """Components ordered by their smallest original label.

    Each entry is the component as its own graph plus the old->new label map.
    """
    seen = [False] * g.n
    out = []
    for v in range(g.n):
        if seen[v]:
            continue
        comp = _bfs_order(g.adj, v)
        for x in comp:
            seen[x] = True
        out.append(induced_subgraph(g, comp))
    return out


def component_labels(g: Graph) -> list[int]:
    """Component index of every vertex, numbered by smallest member."""
    label = [-1] * g.n
    c = 0
    for v in range(g.n):
        if label[v] < 0:
            for x in _bfs_order(g.adj, v):
                label[x] = c
            c += 1
    return label
