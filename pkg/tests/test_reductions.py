import pytest

from dissolab.catalog import all_graphs
from dissolab.corpus import random_cnf_corpus
from dissolab.exact import (
    dissociation_number_exact,
    independence_number_exact,
    induced_matching_number_exact,
    is_independent_set,
)
from dissolab.graph import new_graph, parse_edge_list
from dissolab.reductions import (
    PreconditionFailed,
    cnf_formula,
    gadget_diss_2alpha,
    gadget_diss_alpha,
    gadget_diss_alpha_plus_nus,
    gadget_join_kn,
    parse_cnf,
    parse_gadget_metadata,
    render_gadget,
)
from dissolab.graph import remove_edges
from dissolab.twosat import cnf_satisfiable


def example_formula():
    # (x1 or x2 or x3) and (~x1 or x4 or ~x2) and (x1 or x3 or x4)
    return cnf_formula(
        4,
        [
            [(0, True), (1, True), (2, True)],
            [(0, False), (3, True), (1, False)],
            [(0, True), (2, True), (3, True)],
        ],
    )


class TestCnfValidation:
    def test_wrong_width(self):
        with pytest.raises(ValueError, match="exactly 3"):
            cnf_formula(3, [[(0, True), (1, True)]])

    def test_repeated_variable(self):
        with pytest.raises(ValueError, match="repeats"):
            cnf_formula(3, [[(0, True), (0, False), (1, True)]])

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            cnf_formula(2, [[(0, True), (1, True), (2, True)]])

    def test_parse_dimacs_cnf(self):
        f = parse_cnf("c demo\np cnf 4 2\n1 2 3 0\n-1 4 -2 0\n")
        assert f.var_count == 4 and len(f.clauses) == 2
        assert f.clauses[1] == ((0, False), (3, True), (1, False))


class TestClauseCliqueGadget:
    def test_example_formula_layout(self):
        gi = gadget_diss_2alpha(example_formula())
        g = gi.graph
        assert g.n == 12
        # the only inter-clique edges join complementary occurrences
        cross = sorted(
            e for e in g.edge_list
            if max(e) < 9 and e[0] // 3 != e[1] // 3
        )
        assert cross == [(0, 3), (1, 5), (3, 6)]
        assert gi.vertex_roles[9] == "hub:0"
        assert gi.vertex_roles[3] == "lit:1:0:~x1"

    def test_example_formula_invariants(self):
        g = gadget_diss_2alpha(example_formula()).graph
        assert independence_number_exact(g)[0] == 3
        assert dissociation_number_exact(g)[0] == 6
        assert induced_matching_number_exact(g)[0] == 3
        # the hub vertices themselves form a maximum independent set
        assert is_independent_set(g, {9, 10, 11})

    def test_single_clause_is_k4(self):
        f = cnf_formula(3, [[(0, True), (1, True), (2, True)]])
        g = gadget_diss_2alpha(f).graph
        assert (g.n, g.m) == (4, 6)
        assert independence_number_exact(g)[0] == 1
        assert dissociation_number_exact(g)[0] == 2
        assert induced_matching_number_exact(g)[0] == 1

    def test_empty_formula(self):
        gi = gadget_diss_2alpha(cnf_formula(0, []))
        assert gi.graph.n == 0 and gi.predicted["alpha"] == 0

    def test_same_literal_occurrences_not_joined(self):
        f = cnf_formula(
            3, [[(0, True), (1, True), (2, True)], [(0, True), (1, True), (2, True)]]
        )
        g = gadget_diss_2alpha(f).graph
        cross = [e for e in g.edge_list if max(e) < 6 and e[0] // 3 != e[1] // 3]
        assert cross == []

    def test_unsatisfiable_formula_breaks_equalities(self):
        # all eight sign patterns over three variables: unsatisfiable
        clauses = [
            [(0, a), (1, b), (2, c)]
            for a in (True, False)
            for b in (True, False)
            for c in (True, False)
        ]
        f = cnf_formula(3, clauses)
        assert not cnf_satisfiable(f.var_count, f.clauses)
        g = gadget_diss_2alpha(f).graph
        assert g.n == 32
        diss = dissociation_number_exact(g, cutoff=32)[0]
        alpha = independence_number_exact(g, cutoff=32)[0]
        nus = induced_matching_number_exact(g, cutoff=32)[0]
        assert diss == alpha + nus  # holds unconditionally
        assert diss != 2 * alpha and diss != 2 * nus


class TestDoubledClauseGadget:
    def test_example_formula(self):
        gi = gadget_diss_alpha(example_formula())
        assert gi.graph.n == 18
        assert dissociation_number_exact(gi.graph)[0] == 6
        # satisfiable, so the equality holds
        assert independence_number_exact(gi.graph)[0] == 6

    def test_single_clause_is_octahedron(self):
        f = cnf_formula(3, [[(0, True), (1, True), (2, True)]])
        g = gadget_diss_alpha(f).graph
        assert (g.n, g.m) == (6, 12)
        assert dissociation_number_exact(g)[0] == 2
        assert independence_number_exact(g)[0] == 2

    def test_cross_edges_only_between_literal_halves(self):
        f = cnf_formula(
            1 + 2, [[(0, True), (1, True), (2, True)], [(0, False), (1, True), (2, True)]]
        )
        g = gadget_diss_alpha(f).graph
        cross = [e for e in g.edge_list if e[0] // 6 != e[1] // 6]
        assert cross == [(0, 6)]  # the complementary x1 occurrences

    def test_empty_formula(self):
        assert gadget_diss_alpha(cnf_formula(0, [])).graph.n == 0


class TestCnfGadgetBiconditionals:
    def test_seeded_corpus(self):
        for f in random_cnf_corpus(40, 5, 4, 90001):
            sat = cnf_satisfiable(f.var_count, f.clauses)
            m = len(f.clauses)
            g3 = gadget_diss_2alpha(f).graph
            diss = dissociation_number_exact(g3)[0]
            alpha = independence_number_exact(g3)[0]
            nus = induced_matching_number_exact(g3)[0]
            assert alpha == m and diss == alpha + nus
            assert (diss == 2 * alpha) == sat and (diss == 2 * nus) == sat
            g4 = gadget_diss_alpha(f).graph
            diss4 = dissociation_number_exact(g4)[0]
            assert diss4 == 2 * m
            assert (diss4 == independence_number_exact(g4)[0]) == sat


class TestIndependentSetGadget:
    def test_k2_k2(self):
        gi = gadget_diss_alpha_plus_nus(new_graph(2, [(0, 1)]), 2)
        assert gi.graph.n == 10
        assert (gi.predicted["n_padded"], gi.predicted["k_padded"]) == (3, 3)
        assert dissociation_number_exact(gi.graph)[0] == 7
        assert independence_number_exact(gi.graph)[0] == 5
        assert induced_matching_number_exact(gi.graph)[0] == 2
        # alpha(K2) = 1 < 2, so equality holds: 7 == 5 + 2

    def test_k3_k1(self):
        k3 = new_graph(3, [(0, 1), (0, 2), (1, 2)])
        gi = gadget_diss_alpha_plus_nus(k3, 1)
        assert gi.graph.n == 22
        diss = dissociation_number_exact(gi.graph)[0]
        alpha = independence_number_exact(gi.graph)[0]
        nus = induced_matching_number_exact(gi.graph)[0]
        assert (diss, alpha) == (15, 11)
        assert nus >= 5 and alpha + nus > diss  # equality fails: alpha(K3)=1 >= 1

    @pytest.mark.parametrize("n,k", [(0, 1), (2, 3), (5, 1), (4, 4)])
    def test_order_formula(self, n, k):
        g = new_graph(n, [])
        gi = gadget_diss_alpha_plus_nus(g, k)
        t = max(0, n - 2 * k + 3, 2 - n)
        assert gi.graph.n == 2 * (n + t) + 2 * (k + t - 1)
        assert 2 * (k + t - 1) > n + t >= 2

    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            gadget_diss_alpha_plus_nus(new_graph(2, [(0, 1)]), 0)

    def test_biconditional_on_small_graphs(self):
        for n in range(0, 5):
            for g in all_graphs(n):
                alpha_g = independence_number_exact(g)[0]
                for k in (1, 2, 3):
                    gi = gadget_diss_alpha_plus_nus(g, k)
                    h = gi.graph
                    diss = dissociation_number_exact(h, cutoff=40)[0]
                    alpha = independence_number_exact(h, cutoff=40)[0]
                    nus = induced_matching_number_exact(h, cutoff=40)[0]
                    kk = gi.predicted["k_padded"]
                    assert (alpha_g >= k) == (nus >= kk)
                    assert (alpha_g >= k) == (diss < alpha + nus)


class TestJoinGadget:
    def test_edgeless_three(self):
        gi, m = gadget_join_kn(new_graph(3, []))
        h = gi.graph
        assert h.n == 6 and len(m.edges) == 3
        hm = remove_edges(h, m.edges)
        assert independence_number_exact(h)[0] == 3
        assert independence_number_exact(hm)[0] == 3
        assert dissociation_number_exact(h)[0] == 3
        assert dissociation_number_exact(hm)[0] == 3

    def test_c7(self):
        c7 = new_graph(7, [(i, (i + 1) % 7) for i in range(7)])
        diss_c7 = dissociation_number_exact(c7)[0]
        gi, m = gadget_join_kn(c7)
        h = gi.graph
        assert h.n == 14
        assert independence_number_exact(h)[0] == 3
        assert dissociation_number_exact(h)[0] == diss_c7 == 4
        hm = remove_edges(h, m.edges)
        assert independence_number_exact(hm)[0] == 3
        assert dissociation_number_exact(hm)[0] == diss_c7

    def test_low_alpha_rejected(self):
        with pytest.raises(PreconditionFailed):
            gadget_join_kn(new_graph(3, [(0, 1), (0, 2), (1, 2)]))

    def test_matching_is_cross_perfect(self):
        gi, m = gadget_join_kn(new_graph(4, []))
        n = 4
        assert m.edges == frozenset((v, n + v) for v in range(n))


class TestSerialization:
    def test_round_trip_graph_and_metadata(self):
        gi = gadget_diss_2alpha(example_formula())
        text = render_gadget(gi, {"satisfiable": True})
        g = parse_edge_list(text)
        assert g == gi.graph
        kind, predictions, roles = parse_gadget_metadata(text)
        assert kind == "fig3"
        assert predictions["alpha"] == "3"
        assert predictions["satisfiable"] == "True"
        assert roles[9] == "hub:0"
