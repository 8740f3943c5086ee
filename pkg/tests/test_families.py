from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clutterlab.clutter import graph_from_edges, make_clutter, make_graph
from clutterlab.domination import epsilon, independent_domination
from clutterlab.errors import BadK, BadSpec, NotUniform, TooLarge
from clutterlab.families import (
    FamilySpec,
    all_graphs,
    closed_forms,
    connected_graph_clutter,
    family_clutter,
    is_simplicial_clutter,
    is_simplicial_graph,
    path_clutter_undirected,
    path_counterexample_search,
    realizability_search,
    standard_graph,
)


def edge_names(C):
    return sorted("".join(sorted(C.names(e))) for e in C.edges)


# Oracles working from edge lists rather than adjacency masks.

def oracle_connected(pairs, A):
    A = set(A)
    if not A:
        return False
    start = next(iter(A))
    seen, stack = {start}, [start]
    while stack:
        u = stack.pop()
        for a, b in pairs:
            for x, y in ((a, b), (b, a)):
                if x == u and y in A and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return seen == A


def oracle_traceable(pairs, A):
    adj = {frozenset(p) for p in pairs}
    return any(
        all(frozenset((p[j], p[j + 1])) in adj for j in range(len(p) - 1))
        for p in permutations(A)
    )


STAR = make_graph("cabd", [("c", "a"), ("c", "b"), ("c", "d")])


class TestStandardGraph:
    def test_path(self):
        assert standard_graph(FamilySpec("path", 3, 2)).edge_list() == [(0, 1), (1, 2)]

    def test_triangle(self):
        G = standard_graph(FamilySpec("cycle", 3, 2))
        assert sorted(G.edge_list()) == [(0, 1), (0, 2), (1, 2)]

    @pytest.mark.parametrize("kind, n, k", [("cycle", 2, 2), ("path", 3, 4), ("tree", 3, 2), ("path", 3, 1)])
    def test_bad_spec(self, kind, n, k):
        with pytest.raises(BadSpec):
            FamilySpec(kind, n, k)


class TestConnectedGraphClutter:
    def test_p4(self):
        C = family_clutter(FamilySpec("path", 4, 3))
        assert edge_names(C) == ["123", "234"]

    def test_star(self):
        C = connected_graph_clutter(STAR, 3)
        assert edge_names(C) == ["abc", "acd", "bcd"]

    def test_bad_k(self):
        with pytest.raises(BadK):
            connected_graph_clutter(STAR, 5)
        with pytest.raises(BadK):
            connected_graph_clutter(STAR, 1)

    @settings(max_examples=150)
    @given(st.integers(2, 6), st.data())
    def test_matches_oracle(self, n, data):
        code = data.draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
        pairs = [p for j, p in enumerate(combinations(range(n), 2)) if code >> j & 1]
        G = graph_from_edges(n, pairs)
        assert sorted(connected_graph_clutter(G, 2).edges) == sorted((1 << a) | (1 << b) for a, b in pairs)
        for k in range(2, n + 1):
            expected = sorted(
                sum(1 << v for v in A) for A in combinations(range(n), k) if oracle_connected(pairs, A)
            )
            assert sorted(connected_graph_clutter(G, k).edges) == expected


class TestPathClutter:
    def test_path3(self):
        G = standard_graph(FamilySpec("path", 3, 2))
        assert edge_names(path_clutter_undirected(G, 3)) == ["123"]

    def test_triangle(self):
        G = standard_graph(FamilySpec("cycle", 3, 2))
        assert edge_names(path_clutter_undirected(G, 3)) == ["123"]

    def test_star(self):
        assert edge_names(path_clutter_undirected(STAR, 3)) == ["abc", "acd", "bcd"]

    def test_star_k4_has_no_path(self):
        assert path_clutter_undirected(STAR, 4).edges == ()

    @settings(max_examples=100)
    @given(st.integers(2, 6), st.data())
    def test_matches_permutation_oracle(self, n, data):
        code = data.draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
        pairs = [p for j, p in enumerate(combinations(range(n), 2)) if code >> j & 1]
        G = graph_from_edges(n, pairs)
        for k in range(2, n + 1):
            expected = sorted(
                sum(1 << v for v in A) for A in combinations(range(n), k) if oracle_traceable(pairs, A)
            )
            assert sorted(path_clutter_undirected(G, k).edges) == expected


class TestSimplicial:
    def test_path_leaf(self):
        G = standard_graph(FamilySpec("path", 5, 2))
        assert is_simplicial_graph(G, 0) and is_simplicial_graph(G, 4)
        assert not is_simplicial_graph(G, 2)

    def test_star_center(self):
        assert not is_simplicial_graph(STAR, STAR.index("c"))
        assert is_simplicial_graph(STAR, STAR.index("a"))

    def test_complete(self):
        K4 = graph_from_edges(4, combinations(range(4), 2))
        assert all(is_simplicial_graph(K4, v) for v in range(4))

    def test_two_triangles(self):
        C = make_clutter("abcde", ["abc", "cde"])
        assert not is_simplicial_clutter(C, C.index("c"))
        assert is_simplicial_clutter(C, C.index("a"))

    def test_k4_clutter(self):
        K4 = graph_from_edges(4, combinations(range(4), 2))
        C = connected_graph_clutter(K4, 3)
        for v in range(4):
            through = [e for e in C.edges if e >> v & 1]
            # oracle: every pair of edges through v leaves a third edge in the union minus v
            ok = all(
                any(g & ~((a | b) & ~(1 << v)) == 0 for g in C.edges)
                for a, b in combinations(through, 2)
            )
            assert ok and is_simplicial_clutter(C, v)

    def test_graph_simplicial_implies_clutter_simplicial(self):
        for G in all_graphs(5):
            for v in range(5):
                if is_simplicial_graph(G, v):
                    for k in range(2, 6):
                        assert is_simplicial_clutter(connected_graph_clutter(G, k), v)


class TestClosedForms:
    @pytest.mark.parametrize(
        "kind, n, k, expected",
        [("path", 3, 2, (1, 1, 2)), ("cycle", 5, 2, (2, 2, 3)), ("cycle", 6, 3, (3, 1, 3))],
    )
    def test_table(self, kind, n, k, expected):
        f = closed_forms(FamilySpec(kind, n, k))
        assert (f.i_formula, f.eps_formula, f.pd_formula) == expected

    @pytest.mark.parametrize("kind", ["path", "cycle"])
    def test_domination_columns_small(self, kind):
        for k in (2, 3):
            for n in range(max(k, 3), 9):
                spec = FamilySpec(kind, n, k)
                C, f = family_clutter(spec), closed_forms(spec)
                assert independent_domination(C)[0] == f.i_formula
                assert epsilon(C)[0] == f.eps_formula


class TestRealizability:
    def test_two_triangles_not_realizable(self):
        assert realizability_search(make_clutter("abcde", ["abc", "cde"]), 3) is None

    def test_p4(self):
        C = family_clutter(FamilySpec("path", 4, 3))
        G = realizability_search(C, 3)
        assert G is not None and connected_graph_clutter(G, 3) == C

    def test_pentagon(self, pentagon):
        G = realizability_search(pentagon, 2)
        assert sorted(G.edge_list()) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]

    def test_errors(self):
        with pytest.raises(NotUniform):
            realizability_search(make_clutter("abc", ["a", "bc"]), 2)
        with pytest.raises(TooLarge):
            realizability_search(make_clutter(range(8), [{0, 1}]), 2)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(3, 5), st.data())
    def test_sound_and_complete_on_graph_clutters(self, n, data):
        code = data.draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
        k = data.draw(st.integers(2, n))
        H = graph_from_edges(n, [p for j, p in enumerate(combinations(range(n), 2)) if code >> j & 1])
        C = connected_graph_clutter(H, k)
        G = realizability_search(C, k)
        assert G is not None and connected_graph_clutter(G, k) == C


def test_path_counterexample_search_finds_nothing():
    assert path_counterexample_search(5) is None
