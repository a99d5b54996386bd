import pytest
from hypothesis import given, settings

from dissolab.exact import matching_number_bruteforce
from dissolab.graph import NotBipartiteError, bipartition, new_graph
from dissolab.matching import (
    MatchingNotMaximumError,
    has_augmenting_path,
    is_induced_matching,
    is_matching,
    koenig_cover,
    matching_from_edges,
    maximum_independent_set_bipartite,
    maximum_matching,
)

from strategies import bipartite_graphs


def c6():
    return new_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])


def k33():
    return new_graph(6, [(a, b) for a in range(3) for b in range(3, 6)])


class TestMaximumMatching:
    def test_c6_size(self):
        g = c6()
        m = maximum_matching(g, bipartition(g))
        assert len(m.edges) == 3 == matching_number_bruteforce(g)

    def test_c6_pinned_value(self):
        # frozen output of the deterministic tie-break rule
        g = c6()
        m = maximum_matching(g, bipartition(g))
        assert sorted(m.edges) == [(0, 1), (2, 3), (4, 5)]

    def test_edgeless(self):
        g = new_graph(4, [])
        assert maximum_matching(g, bipartition(g)).edges == frozenset()

    def test_p4(self):
        g = new_graph(4, [(0, 1), (1, 2), (2, 3)])
        m = maximum_matching(g, bipartition(g))
        assert len(m.edges) == 2 == matching_number_bruteforce(g)

    def test_invalid_bipartition_rejected(self):
        from dissolab.graph import Bipartition

        g = c6()
        bad = Bipartition(frozenset({0, 1, 2}), frozenset({3, 4, 5}))
        with pytest.raises(ValueError):
            maximum_matching(g, bad)

    @given(bipartite_graphs(max_side=5))
    @settings(max_examples=150)
    def test_agrees_with_bruteforce(self, g):
        m = maximum_matching(g, bipartition(g))
        assert len(m.edges) == matching_number_bruteforce(g)
        assert not has_augmenting_path(g, bipartition(g), m)

    def test_agrees_with_bruteforce_up_to_12(self):
        from dissolab.corpus import random_bipartite_corpus

        for g in random_bipartite_corpus(60, 12, 77):
            m = maximum_matching(g, bipartition(g))
            assert len(m.edges) == matching_number_bruteforce(g)


class TestKoenigCover:
    def test_c6_cover(self):
        g = c6()
        b = bipartition(g)
        cover = koenig_cover(g, b, maximum_matching(g, b))
        assert len(cover) == 3
        assert all(u in cover or v in cover for u, v in g.edges)

    def test_empty(self):
        g = new_graph(3, [])
        b = bipartition(g)
        assert koenig_cover(g, b, maximum_matching(g, b)) == frozenset()

    def test_k33_perfect_matching(self):
        g = k33()
        b = bipartition(g)
        cover = koenig_cover(g, b, maximum_matching(g, b))
        assert len(cover) == 3

    def test_non_maximum_matching_rejected(self):
        g = c6()
        b = bipartition(g)
        small = matching_from_edges(g, [(0, 1)])
        with pytest.raises(MatchingNotMaximumError):
            koenig_cover(g, b, small)

    @given(bipartite_graphs(max_side=5))
    @settings(max_examples=100)
    def test_cover_properties(self, g):
        b = bipartition(g)
        m = maximum_matching(g, b)
        cover = koenig_cover(g, b, m)
        assert len(cover) == len(m.edges)
        assert all(u in cover or v in cover for u, v in g.edges)


class TestIndependentSet:
    def test_c6(self):
        assert len(maximum_independent_set_bipartite(c6())) == 3

    def test_edgeless(self):
        assert maximum_independent_set_bipartite(new_graph(5, [])) == frozenset(range(5))

    def test_k33(self):
        s = maximum_independent_set_bipartite(k33())
        assert len(s) == 3

    def test_not_bipartite(self):
        with pytest.raises(NotBipartiteError):
            maximum_independent_set_bipartite(new_graph(3, [(0, 1), (1, 2), (0, 2)]))

    @given(bipartite_graphs(max_side=5))
    @settings(max_examples=100)
    def test_independent_and_sized(self, g):
        s = maximum_independent_set_bipartite(g)
        assert all(not g.has_edge(u, v) for u in s for v in s if u < v)
        assert len(s) == g.n - matching_number_bruteforce(g)

    @given(bipartite_graphs(max_side=5))
    @settings(max_examples=100)
    def test_matches_exact_solver(self, g):
        from dissolab.exact import independence_number_exact

        assert len(maximum_independent_set_bipartite(g)) == independence_number_exact(g)[0]


class TestPredicates:
    def test_induced_example(self):
        assert is_induced_matching(c6(), [(0, 1), (3, 4)])

    def test_connected_pairs_not_induced(self):
        g = c6()
        assert is_matching(g, [(0, 1), (2, 3)])
        assert not is_induced_matching(g, [(0, 1), (2, 3)])

    def test_shared_vertex_not_matching(self):
        assert not is_matching(c6(), [(0, 1), (1, 2)])

    def test_missing_edge_not_matching(self):
        assert not is_matching(c6(), [(0, 2)])

    def test_factory_validates(self):
        with pytest.raises(ValueError):
            matching_from_edges(c6(), [(0, 1), (1, 2)])

    def test_factory_induced_flag(self):
        assert matching_from_edges(c6(), [(0, 1), (3, 4)]).induced
        assert not matching_from_edges(c6(), [(0, 1), (2, 3)]).induced
