from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablecore.fixtures import PENDANT_AVOIDING_GRAPH, PENDANT_AVOIDING_SET
from stablecore.graph import Forest, Graph, GraphError, path, pendant_vertices, prufer_decode, spider, star
from stablecore.stable import (
    OracleCapError,
    StableSet,
    alpha_exact,
    alpha_forest,
    enumerate_maximal_stable_sets,
    enumerate_mss,
    extend_pendant_stable_set,
    is_maximal_stable,
    is_stable,
    max_stable_set,
)


def brute_stable_sets(g: Graph):
    """Every stable set, by plain subset enumeration."""
    out = []
    for r in range(g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            if all(not g.has_edge(u, v) for u, v in itertools.combinations(s, 2)):
                out.append(frozenset(s))
    return out


def brute_alpha(g: Graph) -> int:
    return max(len(s) for s in brute_stable_sets(g))


def brute_mss(g: Graph):
    a = brute_alpha(g)
    return sorted((tuple(sorted(s)) for s in brute_stable_sets(g) if len(s) == a))


small_trees = st.integers(2, 11).flatmap(
    lambda n: st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2).map(lambda s: prufer_decode(s, n))
)
mid_trees = st.integers(2, 60).flatmap(
    lambda n: st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2).map(lambda s: prufer_decode(s, n))
)
small_graphs = st.integers(1, 10).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])).map(
        lambda es: Graph(n, es)
    )
)


class TestPredicates:
    def test_is_stable(self):
        p = path(4)
        assert is_stable(p, {0, 2}) and not is_stable(p, {0, 1})
        assert is_stable(p, set())

    def test_is_maximal(self):
        p = path(4)
        assert is_maximal_stable(p, {0, 3})
        assert not is_maximal_stable(p, {0})
        assert not is_maximal_stable(p, {0, 1})

    def test_stable_set_type_validates(self):
        with pytest.raises(GraphError):
            StableSet(path(3), frozenset({0, 1}))
        s = StableSet(path(3), frozenset({0, 2}))
        assert len(s) == 2 and 2 in s and list(s) == [0, 2]
        assert s.to_json() == {"alpha": 2, "members": [0, 2]}


class TestAlpha:
    @pytest.mark.parametrize("n, alpha", [(2, 1), (3, 2), (4, 2), (5, 3), (10, 5)])
    def test_paths(self, n, alpha):
        assert alpha_forest(path(n)) == alpha == alpha_exact(path(n))

    def test_spider_two(self):
        assert alpha_forest(spider(2)) == 3 == brute_alpha(spider(2))

    def test_star(self):
        assert alpha_forest(star(6)) == 6

    def test_forest_with_isolated(self):
        f = Forest(5, [(0, 1)])
        assert alpha_forest(f) == 4

    def test_forest_dp_rejects_cycle(self):
        with pytest.raises(GraphError):
            alpha_forest(Graph(3, [(0, 1), (1, 2), (0, 2)]))

    def test_exact_on_pendant_avoiding_graph(self):
        assert alpha_exact(PENDANT_AVOIDING_GRAPH) == 3 == brute_alpha(PENDANT_AVOIDING_GRAPH)
        assert is_stable(PENDANT_AVOIDING_GRAPH, PENDANT_AVOIDING_SET)

    def test_exact_cap(self):
        with pytest.raises(OracleCapError):
            alpha_exact(path(65))

    @given(small_trees)
    @settings(max_examples=200)
    def test_dp_matches_brute_force(self, t):
        assert alpha_forest(t) == brute_alpha(t)

    @given(small_graphs)
    @settings(max_examples=200)
    def test_exact_matches_brute_force(self, g):
        assert alpha_exact(g) == brute_alpha(g)

    @given(mid_trees)
    @settings(max_examples=100)
    def test_dp_matches_exact(self, t):
        assert alpha_forest(t) == alpha_exact(t)

    @given(mid_trees)
    @settings(max_examples=100)
    def test_max_stable_set_is_maximum(self, t):
        s = max_stable_set(t)
        assert is_stable(t, s.members) and len(s) == alpha_forest(t)


class TestEnumeration:
    def test_p4(self):
        omega = enumerate_mss(path(4))
        assert omega.complete and omega.alpha == 2
        assert [tuple(s) for s in omega.witnesses] == [(0, 2), (0, 3), (1, 3)]
        assert omega.intersection() == frozenset()

    def test_p3_unique(self):
        omega = enumerate_mss(path(3))
        assert [tuple(s) for s in omega.witnesses] == [(0, 2)]
        assert omega.intersection() == {0, 2}

    def test_cap_truncates(self):
        omega = enumerate_mss(path(4), cap=2)
        assert not omega.complete and len(omega.witnesses) == 2
        with pytest.raises(ValueError):
            omega.intersection()

    def test_cap_exact_count_is_complete(self):
        assert enumerate_mss(path(4), cap=3).complete

    def test_enumeration_size_cap(self):
        with pytest.raises(OracleCapError):
            enumerate_mss(path(25))

    @given(small_trees)
    @settings(max_examples=150)
    def test_mss_match_brute_force(self, t):
        assert [tuple(s) for s in enumerate_mss(t).witnesses] == brute_mss(t)

    @given(small_graphs)
    @settings(max_examples=100)
    def test_maximal_sets_match_brute_force(self, g):
        stable = brute_stable_sets(g)
        maximal = sorted(tuple(sorted(s)) for s in stable if not any(s < o for o in stable))
        got = [tuple(s) for s in enumerate_maximal_stable_sets(g)]
        assert got == maximal

    def test_maximal_size_filter(self):
        got = [tuple(s) for s in enumerate_maximal_stable_sets(path(4), size_filter=2)]
        assert got == [(0, 2), (0, 3), (1, 3)]
        assert enumerate_maximal_stable_sets(path(4), size_filter=3) == []


class TestPendantExtension:
    def test_p3(self):
        s = extend_pendant_stable_set(path(3), {0})
        assert s.members == {0, 2}

    def test_rejects_non_pendant(self):
        with pytest.raises(GraphError, match="not pendant"):
            extend_pendant_stable_set(path(4), {1})

    def test_rejects_non_stable(self):
        with pytest.raises(GraphError, match="not stable"):
            extend_pendant_stable_set(path(2), {0, 1})

    @given(small_trees, st.data())
    @settings(max_examples=150)
    def test_extension_is_maximum_and_contains_a(self, t, data):
        pend = sorted(pendant_vertices(t))
        a = set()
        for v in data.draw(st.permutations(pend)):
            if is_stable(t, a | {v}):
                a.add(v)
        s = extend_pendant_stable_set(t, a)
        assert a <= s.members
        assert len(s) == brute_alpha(t)
