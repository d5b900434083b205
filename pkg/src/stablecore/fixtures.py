"""Small hand-drawn graphs used as fixtures, transcribed as labeled graphs.

Vertices are numbered row by row: top row left to right, then the bottom row.
Named vertices from the drawings are exposed in the ``*_NAMES`` dicts.
"""

from __future__ import annotations

from .graph import Graph, Tree

# Non-tree with one pendant vertex (6) and a maximum stable set {1, 3, 5}
# (the large dots) that avoids it.
PENDANT_AVOIDING_GRAPH = Graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 3), (3, 4), (4, 5), (5, 6)])
PENDANT_AVOIDING_SET = frozenset({1, 3, 5})

# Two trees whose set {a, b} is maximal stable and contains no pendant vertex.
PENDANT_FREE_MAXIMAL_LEFT = Tree(9, [(5, 0), (5, 1), (5, 2), (5, 3), (6, 3), (6, 4), (7, 4), (8, 4)])
PENDANT_FREE_MAXIMAL_LEFT_NAMES = {"a": 5, "b": 4}
PENDANT_FREE_MAXIMAL_RIGHT = Tree(5, [(3, 0), (3, 1), (4, 1), (4, 2)])
PENDANT_FREE_MAXIMAL_RIGHT_NAMES = {"a": 3, "b": 4}

# Tree with exactly two core pendant vertices u, v at distance 6.
TWO_CORE_PENDANTS = Tree(9, [(0, 1), (1, 2), (2, 6), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)])
TWO_CORE_PENDANTS_NAMES = {"u": 0, "x": 1, "c": 2, "v": 3, "y": 4, "d": 5}

# Both color classes hold pendant vertices, yet alpha > n/2.
PENDANTS_IN_BOTH_CLASSES = Tree(5, [(3, 0), (3, 1), (3, 2), (4, 2)])

# Maximal stable {a, b, c} with min(|A|, |B|) < 3 < n/2, containing pendants.
MAXIMAL_BETWEEN_BOUNDS = Tree(7, [(5, 0), (5, 1), (5, 2), (6, 2), (6, 3), (6, 4)])
MAXIMAL_BETWEEN_BOUNDS_NAMES = {"a": 5, "b": 3, "c": 4}

# Maximal stable {a, b, c} smaller than min(|A|, |B|), containing pendants.
MAXIMAL_BELOW_MIN = Tree(10, [(5, 0), (5, 1), (5, 2), (6, 2), (6, 3), (7, 3), (8, 3), (8, 4), (4, 9)])
MAXIMAL_BELOW_MIN_NAMES = {"a": 5, "b": 3, "c": 9}
