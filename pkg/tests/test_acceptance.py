"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines; all expected values are exact (zero tolerance), produced by the
exhaustive oracles in dissolab.exact.
"""

import time
from contextlib import contextmanager

import pytest

from dissolab.catalog import all_graphs, connected_bipartite_graphs
from dissolab.checks import (
    check_approx,
    check_chain,
    check_cnf_gadgets,
    check_is_gadget,
    check_join_gadget,
    check_matching_oracle,
    check_recognizer,
)
from dissolab.corpus import (
    join_input_corpus,
    random_2sat_corpus,
    random_bipartite_corpus,
    random_cnf_corpus,
    random_graph_corpus,
)
from dissolab.exact import dissociation_number_exact
from dissolab.graph import new_graph
from dissolab.matching import matching_from_edges
from dissolab.recognizer import Extremal, NotExtremal, NotExtremalReason, recognize_extremal
from dissolab.twosat import cnf_satisfiable, satisfies, solve_2sat

# pinned corpus seeds; changing any of these changes the acceptance corpus
CHAIN_SEED = 101
BIPARTITE_SEED = 202
CNF_SEED = 303
JOIN_SEED = 404
TWOSAT_SEED = 505


@contextmanager
def criterion(number, description):
    started = time.monotonic()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.monotonic() - started
        status = "PASS" if ok else "FAIL"
        print(f"acceptance criterion {number} ({description}): {status} "
              f"[{elapsed:.1f}s]")


def bipartite_corpus_300():
    return random_bipartite_corpus(300, 14, BIPARTITE_SEED)


def test_criterion_1_inequality_chain(connected_catalog_8):
    with criterion(1, "inequality chain + induced-matching detour"):
        assert len(connected_catalog_8) == 12113  # catalog is complete
        failures = [
            detail
            for g in connected_catalog_8
            if (detail := check_chain(g)) is not None
        ]
        assert not failures, failures[:3]
        for g in random_graph_corpus(500, 14, CHAIN_SEED):
            detail = check_chain(g)
            assert detail is None, detail


def test_criterion_2_approximation_guarantee():
    with criterion(2, "4/3-approximation bounds on 300 bipartite instances"):
        for g in bipartite_corpus_300():
            detail = check_approx(g)
            assert detail is None, detail


def test_criterion_3_recognizer_soundness_completeness(bipartite_catalog_10):
    with criterion(3, "recognizer agrees with the oracles"):
        assert len(bipartite_catalog_10) == 5016  # catalog is complete
        for g in bipartite_catalog_10:
            detail = check_recognizer(g)
            assert detail is None, detail
        for g in bipartite_corpus_300():
            detail = check_recognizer(g)
            assert detail is None, detail


def test_criterion_4_named_fixtures():
    with criterion(4, "named fixtures"):
        c6 = new_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
        outcome = recognize_extremal(c6, matching_from_edges(c6, [(0, 1), (2, 3), (4, 5)]))
        assert isinstance(outcome, Extremal)
        assert len(outcome.max_dissociation_set) == 4 == dissociation_number_exact(c6)[0]

        p4 = new_graph(4, [(0, 1), (1, 2), (2, 3)])
        outcome = recognize_extremal(p4, matching_from_edges(p4, [(0, 1), (2, 3)]))
        assert isinstance(outcome, NotExtremal)

        two_k2 = new_graph(4, [(0, 1), (2, 3)])
        outcome = recognize_extremal(
            two_k2, matching_from_edges(two_k2, [(0, 1), (2, 3)])
        )
        assert isinstance(outcome, NotExtremal)
        assert outcome.reason is NotExtremalReason.MATCHING_SIZE_MISMATCH


def test_criterion_5_cnf_gadget_biconditionals():
    with criterion(5, "3-CNF gadget biconditionals on 200 formulas"):
        for f in random_cnf_corpus(200, 5, 4, CNF_SEED):
            detail = check_cnf_gadgets(f)
            assert detail is None, detail


def test_criterion_6_is_reduction_biconditional():
    with criterion(6, "Independent-Set gadget on all graphs with n <= 5"):
        for n in range(0, 6):
            for g in all_graphs(n):
                for k in range(1, 5):
                    detail = check_is_gadget(g, k)
                    assert detail is None, (n, k, detail)


def test_criterion_7_join_gadget():
    with criterion(7, "join gadget preserves alpha and diss"):
        inputs = join_input_corpus(20, 7, JOIN_SEED)
        assert len(inputs) == 20
        for g in inputs:
            detail = check_join_gadget(g)
            assert detail is None, detail


def test_criterion_8_twosat_and_matching_oracles(bipartite_catalog_10):
    with criterion(8, "2-SAT vs truth table; matching vs brute force"):
        formulas = random_2sat_corpus(1000, 15, TWOSAT_SEED)
        assert len(formulas) == 1000
        for f in formulas:
            assignment = solve_2sat(f)
            expected = cnf_satisfiable(f.var_count, f.clauses)
            assert (assignment is not None) == expected
            if assignment is not None:
                assert satisfies(f, assignment)
        for g in bipartite_catalog_10:
            detail = check_matching_oracle(g)
            assert detail is None, detail
