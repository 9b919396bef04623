"""Exact oracles, generators, local search, statement batteries, falsify suites."""

import pytest

from turanpaths.constructions import build_H, build_Z
from turanpaths.errors import CapabilityError, UsageError
from turanpaths.formulas import ex_matching, ex_path
from turanpaths.graphs import (
    Graph,
    canonical_code,
    graph6_decode,
    graph6_encode,
    is_isomorphic,
    is_two_connected,
)
from turanpaths.oracle import (
    _iso_classes,
    adjudicate_theorem17,
    brute_ex,
    check_lemma31,
    check_lemma32,
    check_remark_grid,
    crossover,
    falsify,
    local_search_max,
    random_two_connected,
    reverify_counterexample,
    verify_upper_at,
)
from turanpaths.paths import contains_forest
from turanpaths.rng import Rng


def test_iso_class_counts():
    for n, count in enumerate([1, 1, 2, 4, 11, 34, 156, 1044]):
        assert len(_iso_classes(n)) == count
    codes = {canonical_code(g) for g in _iso_classes(6)}
    assert len(codes) == 156  # pairwise non-isomorphic


def test_brute_ex_pinned_values():
    value, witnesses = brute_ex(6, (3, 3))
    assert value == 10
    assert [graph6_encode(w) for w in witnesses] == ["ETmw"]
    value, witnesses = brute_ex(7, (3, 3))
    assert value == 11
    assert [graph6_encode(w) for w in witnesses] == ["FQilW"]
    for w in witnesses:
        assert not contains_forest(w, (3, 3))


def test_brute_ex_against_labeled_enumeration():
    from itertools import combinations

    for n in range(1, 6):
        pairs = list(combinations(range(n), 2))
        for orders in ((3,), (4,), (2, 2), (3, 3)):
            best = 0
            for mask in range(1 << len(pairs)):
                es = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
                g = Graph.from_edges(n, es)
                if not contains_forest(g, orders):
                    best = max(best, len(es))
            assert brute_ex(n, orders)[0] == best, (n, orders)


def test_brute_ex_guards():
    with pytest.raises(CapabilityError):
        brute_ex(8, (3, 3))
    with pytest.raises(UsageError):
        brute_ex(5, ())
    with pytest.raises(UsageError):
        brute_ex(5, (0, 3))


def test_verify_upper_pass_and_violation():
    rep = verify_upper_at(6, (3, 3), 10)
    assert rep.verdict == "pass" and rep.samples == 220
    rep = verify_upper_at(6, (3, 3), 9)
    assert rep.verdict == "violated"
    ce = rep.counterexample
    assert ce["edges"] == 10
    g = graph6_decode(ce["graph6"])
    assert g.edge_count() == 10 and not contains_forest(g, (3, 3))
    rep = verify_upper_at(8, (5, 3), 21)
    assert rep.verdict == "pass"


def test_verify_upper_trivial_budget():
    # claimed value >= C(n,2): nothing to search
    rep = verify_upper_at(6, (3, 3), 15)
    assert rep.verdict == "pass" and rep.samples == 0


def test_random_two_connected_contract():
    for seed in range(20):
        rng = Rng(seed * 977 + 5)
        n = rng.randrange(4, 13)
        m = rng.randrange(n, n * (n - 1) // 2 + 1)
        g = random_two_connected(n, m, seed)
        assert g.n == n and g.edge_count() == m
        assert is_two_connected(g)
        assert random_two_connected(n, m, seed) == g  # deterministic in the seed
    assert random_two_connected(8, 12, 1) != random_two_connected(8, 12, 2)
    with pytest.raises(UsageError):
        random_two_connected(2, 1, 0)
    with pytest.raises(UsageError):
        random_two_connected(6, 5, 0)  # below n edges


def test_local_search_reaches_known_optimum():
    value, g = local_search_max(7, (3, 3), budget=2000, seed=42)
    assert value == 11 == brute_ex(7, (3, 3))[0]
    assert g.edge_count() == 11 and not contains_forest(g, (3, 3))
    # determinism in the seed
    v2, g2 = local_search_max(7, (3, 3), budget=2000, seed=42)
    assert (v2, g2) == (value, g)


def test_local_search_never_exceeds_brute():
    for n in range(5, 8):
        cap = brute_ex(n, (3, 3))[0]
        value, g = local_search_max(n, (3, 3), budget=800, seed=7)
        assert value <= cap
        assert not contains_forest(g, (3, 3))


def test_lemma_batteries_spot():
    rep = check_lemma31(2, 1)
    assert rep.verdict == "pass" and rep.params == {"k": 4, "k1": 2, "k2": 1}
    rep = check_lemma32(2, 2)
    assert rep.verdict == "pass"
    assert rep.detail["exceptions_confirmed"] == {
        "a2_spoke_off_cycle": True,
        "a1a3_not_hamiltonian": True,
    }
    with pytest.raises(UsageError):
        check_lemma31(1, 1)
    with pytest.raises(UsageError):
        check_lemma32(3, 1)
    with pytest.raises(CapabilityError):
        check_lemma31(6, 3)  # k = 10 beyond the battery cap


def test_remark_grid():
    rep = check_remark_grid(max_n=10, max_k=6)
    assert rep.verdict == "pass" and rep.samples == 24
    with pytest.raises(CapabilityError):
        check_remark_grid(max_n=20, max_k=6)


def test_crossover_bracketing():
    out = crossover((5, 5), max_n=40)
    assert out["last_clique_n"] == 17 and out["first_h_n"] == 18
    assert out["spans"]["clique-plus-extremal"] == [10, 17]
    assert out["spans"]["h-graph"][0] == 18
    assert out["values_at_boundary"] == {"17": 48, "18": 49}


def test_adjudication_report():
    rep = adjudicate_theorem17()
    assert rep.verdict == "pass"
    assert rep.detail == {
        "n8_upper": "pass",
        "n8_witness_edges": 21,
        "n14_witness_edges": 26,
        "n14_witness_free": True,
        "literal_value": 24,
        "uniform_value": 26,
        "literal_understates": True,
        "uniform_matches": True,
    }


def test_yuan_exception_graphs_self_recognize():
    # the exception clause holds with the graph's own (omega + delta, delta)
    from turanpaths.graphs import clique_number

    for (n, k, a) in ((9, 6, 2), (12, 7, 3), (11, 8, 2)):
        g = build_H(n, k, a).graph
        om, de = clique_number(g), g.min_degree()
        assert om + de == k and de == a
        assert is_isomorphic(g, build_H(n, om + de, de).graph)
    g = build_Z(10, 7, 3).graph
    om, de = clique_number(g), g.min_degree()
    assert om + de == 7 and de == 3
    assert is_isomorphic(g, build_Z(10, om + de, de).graph)


def test_falsify_smoke_all_suites():
    for suite, max_n in (("posa", 10), ("fan", 10), ("kopylov", 10),
                         ("yuan", 10), ("stability", 11), ("connected-bound", 12)):
        rep = falsify(suite, samples=120, seed=42, max_n=max_n)
        assert rep.verdict == "pass", rep.to_json()
        assert rep.samples == 120
        assert rep.params == {"samples": 120, "seed": 42, "max_n": max_n}
        assert rep.detail == {"violations": 0}


def test_falsify_worker_count_does_not_change_output():
    for suite in ("posa", "yuan"):
        base = falsify(suite, samples=90, seed=5, max_n=10).dumps()
        assert falsify(suite, samples=90, seed=5, max_n=10, workers=2).dumps() == base
        assert falsify(suite, samples=90, seed=5, max_n=10, workers=4).dumps() == base


def test_falsify_guards():
    with pytest.raises(UsageError):
        falsify("nope")
    with pytest.raises(UsageError):
        falsify("posa", samples=0)
    with pytest.raises(UsageError):
        falsify("posa", max_n=40)
    with pytest.raises(UsageError):
        falsify("connected-bound", max_n=9)  # below the smallest meaningful order


def test_reverify_connected_bound_certificate():
    # self-contained certificate: the complete graph beats the bound one vertex
    # below where the theorem applies, so it must reverify as a true violation
    ce = {"graph6": graph6_encode(Graph.complete(9)), "k1": 2, "k2": 2,
          "edges": 36, "bound": 29}
    assert reverify_counterexample("connected-bound", ce)
    ce_bad = dict(ce, graph6=graph6_encode(Graph.complete(10)))
    assert not reverify_counterexample("connected-bound", ce_bad)  # K_10 fits the forest


def test_reverify_kopylov_certificate():
    # C_6 is 2-connected but far below the threshold, so the cert must fail
    g = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    assert not reverify_counterexample("kopylov", {"graph6": graph6_encode(g), "k": 5})


def test_reverify_posa_round_trip():
    # fabricate a non-violation and confirm the reverifier rejects it
    g = Graph.complete(4)
    ce = {"graph6": graph6_encode(g), "path": [0, 1, 2, 3], "bound": 4}
    assert not reverify_counterexample("posa", ce)  # K_4 has the 4-cycle
