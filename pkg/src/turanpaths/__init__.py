"""Exact Turán numbers for vertex-disjoint path forests.

Closed-form edge-count formulas, the matching extremal constructions, exact
search oracles at desk scale, and randomized falsification suites, all under
one roof with a JSON-speaking command line front end.
"""

from .constructions import (
    Construction,
    build_Fkt,
    build_H,
    build_HkM2,
    build_HkP3,
    build_Hks,
    build_pair_witness,
    build_path_extremal,
    build_turan,
    build_Z,
    expected_edges,
)
from .errors import CapabilityError, Graph6Error, UsageError
from .formulas import (
    ExtremalResult,
    c_def,
    c_pair,
    c_small,
    conjecture_value,
    ex_matching,
    ex_path,
    ex_path_eg_bound,
    f_conn,
    fan_bound,
    g_value,
    h_formula,
    identity_grids,
    kopylov_threshold,
    p3_pair_value,
    prop_grid_33,
    prop_grid_34,
    prop_grid_35,
    stability_threshold,
    two_paths_value,
)
from .graphs import (
    Graph,
    canonical_code,
    canonical_order,
    clique_number,
    complement,
    connected_components,
    dot_encode,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    is_two_connected,
)
from .oracle import (
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
from .paths import (
    alpha_disintegration,
    circumference,
    contains_family_F,
    contains_forest,
    contains_subgraph,
    exists_cycle_at_least,
    find_cycle_at_least,
    find_forest,
    find_path_of_order,
    has_path_of_order,
    is_hamiltonian,
    longest_path,
    longest_path_between,
    posa_bound,
    twin_classes,
)
from .reports import CheckReport
from .rng import Rng, substream

__version__ = "0.1.0"

__all__ = [
    "CapabilityError",
    "CheckReport",
    "Construction",
    "ExtremalResult",
    "Graph",
    "Graph6Error",
    "Rng",
    "UsageError",
    "adjudicate_theorem17",
    "alpha_disintegration",
    "brute_ex",
    "build_Fkt",
    "build_H",
    "build_HkM2",
    "build_HkP3",
    "build_Hks",
    "build_Z",
    "build_pair_witness",
    "build_path_extremal",
    "build_turan",
    "c_def",
    "c_pair",
    "c_small",
    "canonical_code",
    "canonical_order",
    "check_lemma31",
    "check_lemma32",
    "check_remark_grid",
    "circumference",
    "clique_number",
    "complement",
    "conjecture_value",
    "connected_components",
    "contains_family_F",
    "contains_forest",
    "contains_subgraph",
    "crossover",
    "dot_encode",
    "ex_matching",
    "ex_path",
    "ex_path_eg_bound",
    "exists_cycle_at_least",
    "expected_edges",
    "f_conn",
    "falsify",
    "fan_bound",
    "find_cycle_at_least",
    "find_forest",
    "find_path_of_order",
    "g_value",
    "graph6_decode",
    "graph6_encode",
    "h_formula",
    "has_path_of_order",
    "identity_grids",
    "induced_subgraph",
    "is_connected",
    "is_hamiltonian",
    "is_isomorphic",
    "is_two_connected",
    "kopylov_threshold",
    "local_search_max",
    "longest_path",
    "longest_path_between",
    "p3_pair_value",
    "posa_bound",
    "prop_grid_33",
    "prop_grid_34",
    "prop_grid_35",
    "random_two_connected",
    "reverify_counterexample",
    "stability_threshold",
    "substream",
    "twin_classes",
    "two_paths_value",
    "verify_upper_at",
]
