"""Acceptance gate: nine criteria, one test and one printed verdict line each.

Run with `pytest -v -s tests/test_acceptance.py` to see the per-criterion
lines.  The slow legs are A2 (full construction grids to n = 400) and A4
(36 local-search points at 10^5 iterations each); the whole file is a desk
job of roughly three quarters of an hour on one core.
"""

import time

from turanpaths.cli import main as cli_main
from turanpaths.constructions import (
    build_Fkt,
    build_H,
    build_HkM2,
    build_HkP3,
    build_Hks,
    build_pair_witness,
    build_path_extremal,
    build_Z,
)
from turanpaths.formulas import (
    c_pair,
    c_small,
    ex_matching,
    ex_path,
    h_formula,
    identity_grids,
    prop_grid_33,
    prop_grid_34,
    prop_grid_35,
    two_paths_value,
)
from turanpaths.graphs import (
    Graph,
    canonical_code,
    graph6_decode,
    graph6_encode,
    is_two_connected,
)
from turanpaths.oracle import (
    adjudicate_theorem17,
    brute_ex,
    check_lemma31,
    check_lemma32,
    check_remark_grid,
    crossover,
    falsify,
    local_search_max,
    random_two_connected,
    verify_upper_at,
)
from turanpaths.paths import contains_forest
from turanpaths.rng import Rng


def _report(tag: str, message: str, t0: float) -> None:
    print(f"{tag} PASS — {message} ({time.time() - t0:.1f}s)")


def test_A1_brute_force_matches_formulas():
    t0 = time.time()
    points = 0
    for n in range(3, 8):
        for k in range(3, n + 1):
            assert brute_ex(n, (k,))[0] == ex_path(n, k), (n, k)
            points += 1
    for t in (2, 3):
        for n in range(2 * t, 8):
            assert brute_ex(n, (2,) * t)[0] == ex_matching(n, t), (n, t)
            points += 1
    assert time.time() - t0 <= 600
    _report("A1", f"exhaustive search equals both formulas at {points} points", t0)


def test_A2_constructions_match_formulas():
    t0 = time.time()
    checked = 0
    for k in range(2, 401):
        for a in range(1, k // 2 + 1):
            for n in range(k, 401):
                assert build_H(n, k, a).graph.edge_count() == h_formula(n, k, a)
                checked += 1
    for s in range(3, 399):
        for t in range(3, s + 1):
            for n in range(s + t - 1, 401):
                assert build_pair_witness(n, s, t).graph.edge_count() == c_pair(n, s, t)
                checked += 1
    for k in range(3, 401):
        for n in range(0, 401):
            assert build_path_extremal(n, k).graph.edge_count() == ex_path(n, k)
            checked += 1
    assert build_Hks(5, 2).graph.edge_count() == 24
    assert build_HkM2(5).graph.edge_count() == 30
    assert build_HkP3(5).graph.edge_count() == 30
    assert build_Fkt(3, 2).graph.edge_count() == 14
    assert build_Z(10, 7, 3).graph.edge_count() == 21
    _report("A2", f"builder edge counts equal formulas at {checked} grid points", t0)


def test_A3_point_certification_10_55():
    t0 = time.time()
    witness = Graph.complete(9).disjoint_union(Graph.empty(1))
    assert witness.edge_count() == 36
    assert not contains_forest(witness, (5, 5))
    rep = verify_upper_at(10, (5, 5), 36)
    assert rep.verdict == "pass", rep.to_json()
    assert time.time() - t0 <= 3600
    _report("A3", "36 edges attained, forest-free, and certified maximal at n=10", t0)


def test_A4_branch_behavior_and_local_search():
    t0 = time.time()
    grids = [(5, 5, range(10, 29)), (7, 5, range(12, 29))]
    fams = {
        "pair-witness": lambda p: build_pair_witness(p["n"], p["s"], p["t"]).graph,
        "path-extremal": lambda p: build_path_extremal(p["n"], p["k"]).graph,
        "hnka": lambda p: build_H(p["n"], p["k"], p["a"]).graph,
        "complete": lambda p: Graph.complete(p["n"]),
    }
    for k1, k2, ns in grids:
        for n in ns:
            r = two_paths_value(n, k1, k2)
            g = fams[r.witness_family](r.witness_params)
            assert g.edge_count() == r.value, (n, k1, k2)
            assert not contains_forest(g, (k1, k2)), (n, k1, k2)
    # every branch's construction stays admissible, not just the winner's
    for k1, k2 in ((5, 5), (7, 5), (7, 7), (9, 5)):
        a = k1 // 2 + k2 // 2 - 1
        for n in range(k1 + k2, 29):
            for g in (
                build_pair_witness(n, k1, k2).graph,
                build_path_extremal(n, k1).graph,
                build_H(n, k1 + k2 - 2, a).graph,
            ):
                assert not contains_forest(g, (k1, k2)), (n, k1, k2)
    out = crossover((5, 5), max_n=60)
    assert out["last_clique_n"] == 17 and out["first_h_n"] == 18
    assert out["values_at_boundary"] == {"17": 48, "18": 49}
    assert two_paths_value(17, 5, 5).value == 48
    assert two_paths_value(18, 5, 5).value == 49
    for k1, k2, ns in grids:
        for n in ns:
            formula = two_paths_value(n, k1, k2).value
            found, g = local_search_max(n, (k1, k2), budget=100_000, seed=42)
            assert found <= formula, (n, k1, k2, found, formula)
            assert not contains_forest(g, (k1, k2))
    _report("A4", "witnesses attain the formula, crossover at 17/18, search never beats it", t0)


def test_A5_lemma_batteries_and_remark_grid():
    t0 = time.time()
    pairs31 = [(k1, k2) for k1 in range(2, 9) for k2 in range(1, k1 + 1) if k1 + k2 + 1 <= 9]
    assert len(pairs31) == 15
    for k1, k2 in pairs31:
        rep = check_lemma31(k1, k2)
        assert rep.verdict == "pass", rep.to_json()
    pairs32 = [(k1, k2) for k1 in range(2, 9) for k2 in range(2, k1 + 1) if k1 + k2 + 1 <= 9]
    assert len(pairs32) == 9
    for k1, k2 in pairs32:
        rep = check_lemma32(k1, k2)
        assert rep.verdict == "pass", rep.to_json()
    rep = check_remark_grid(max_n=14, max_k=9)
    assert rep.verdict == "pass", rep.to_json()
    assert time.time() - t0 <= 1800
    _report("A5", f"24 lemma pairs and {rep.samples} remark points verified", t0)


def test_A6_transcription_adjudication():
    t0 = time.time()
    rep = adjudicate_theorem17()
    assert rep.verdict == "pass", rep.to_json()
    d = rep.detail
    assert d["n8_upper"] == "pass" and d["n8_witness_edges"] == 21
    assert d["n14_witness_edges"] == 26 and d["n14_witness_free"]
    assert d["literal_value"] == 24 and d["uniform_value"] == 26
    assert d["literal_understates"] and d["uniform_matches"]
    _report("A6", "ex(8,(5,3))=21 certified; 26-edge graph beats the literal 24", t0)


def test_A7_randomized_statement_suites():
    t0 = time.time()
    for suite in ("posa", "fan", "kopylov", "yuan", "stability", "connected-bound"):
        rep = falsify(suite, samples=1000, seed=42, max_n=14)
        assert rep.verdict == "pass", rep.to_json()
        assert rep.samples == 1000
        assert rep.detail == {"violations": 0}
    _report("A7", "six suites, 1000 seeded samples each, zero violations", t0)


def test_A8_arithmetic_grids():
    t0 = time.time()
    for rep in (
        prop_grid_33(max_k=12, max_n=300),
        prop_grid_34(max_k=12, max_n=300),
        prop_grid_35(max_k=12, max_n=300),
        identity_grids(max_k=12, max_n=300),
    ):
        assert rep.verdict == "pass", rep.to_json()
    for m in range(2, 51):
        for n in range(2 * m, 301):
            assert h_formula(n, 2 * m, m - 1) == c_small(n, 2 * m) + 1
    assert time.time() - t0 <= 60
    _report("A8", "three inequality grids and both identities hold pointwise", t0)


def test_A9_infrastructure(capsys):
    t0 = time.time()
    rng = Rng(7)
    for _ in range(10_000):
        n = rng.randrange(0, 15)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.randrange(2)]
        g = Graph.from_edges(n, edges)
        assert graph6_decode(graph6_encode(g)) == g
    rng = Rng(11)
    for _ in range(100):
        n = rng.randrange(2, 11)
        g = Graph.from_edges(
            n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.randrange(2)]
        )
        code = canonical_code(g)
        for _ in range(1000):
            order = list(range(n))
            rng.shuffle(order)
            assert canonical_code(g.relabeled(order)) == code
    base = falsify("yuan", samples=200, seed=42, max_n=12).dumps()
    for workers in (2, 3):
        assert falsify("yuan", samples=200, seed=42, max_n=12, workers=workers).dumps() == base
    g = random_two_connected(12, 20, seed=9)
    assert random_two_connected(12, 20, seed=9) == g and is_two_connected(g)
    assert local_search_max(8, (3, 3), budget=500, seed=3) == local_search_max(
        8, (3, 3), budget=500, seed=3
    )
    argv = ["falsify", "kopylov", "--samples", "150", "--seed", "42", "--max-n", "12"]
    assert cli_main(argv) == 0
    first = capsys.readouterr().out
    assert cli_main(argv) == 0
    assert capsys.readouterr().out == first
    assert cli_main(argv + ["--workers", "2"]) == 0
    assert capsys.readouterr().out == first
    _report("A9", "codec fuzz, canonical invariance, and worker-count determinism", t0)
