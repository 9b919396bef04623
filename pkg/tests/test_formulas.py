"""Closed-form values, branch attribution, and the pointwise inequality grids."""

from fractions import Fraction

import pytest

from turanpaths.errors import UsageError
from turanpaths.formulas import (
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


def test_c_def_values():
    assert c_def(3, 5, 4) == 3
    assert c_def(12, 10, 5) == 39
    assert c_def(20, 12, 5) == 67


def test_c_def_rejects_bad_params():
    with pytest.raises(UsageError):
        c_def(10, 4, 5)  # m < l
    with pytest.raises(UsageError):
        c_def(10, 5, 2)  # l < 3
    with pytest.raises(UsageError):
        c_def(-1, 5, 3)


def test_c_small_values():
    assert c_small(10, 4) == 9
    assert c_small(30, 8) == 84
    assert c_small(18, 8) + 1 == h_formula(18, 8, 3) == 49


def test_c_small_rejects_bad_params():
    with pytest.raises(UsageError):
        c_small(10, 3)
    with pytest.raises(UsageError):
        c_small(1, 8)  # n below floor(m/2)-1


def test_h_formula_values():
    assert h_formula(10, 8, 2) == 23
    assert h_formula(12, 8, 3) == 31
    assert h_formula(8, 8, 3) == 19
    assert h_formula(20, 10, 4) == 71


def test_h_formula_rejects_bad_params():
    with pytest.raises(UsageError):
        h_formula(7, 8, 2)  # n < k
    with pytest.raises(UsageError):
        h_formula(10, 3, 2)  # k < 2a
    with pytest.raises(UsageError):
        h_formula(10, 8, 0)


def test_ex_path_values():
    assert ex_path(7, 4) == 6
    assert ex_path(4, 5) == 6
    assert ex_path(12, 5) == 18
    assert ex_path(0, 3) == 0


def test_ex_path_erdos_gallai_bound():
    bound, tight = ex_path_eg_bound(12, 5)
    assert bound == Fraction(18) and tight
    bound, tight = ex_path_eg_bound(7, 4)
    assert bound == Fraction(7) and not tight
    assert ex_path(7, 4) == 6 < bound
    bound, tight = ex_path_eg_bound(8, 5)
    assert bound == Fraction(12) and tight
    assert ex_path(8, 5) == 12  # divisible case meets the bound
    for k in range(3, 9):
        for n in range(k, 60):
            bound, tight = ex_path_eg_bound(n, k)
            assert ex_path(n, k) <= bound
            assert (ex_path(n, k) == bound) == (n % (k - 1) == 0) == tight


def test_ex_matching_values():
    assert ex_matching(4, 2) == 3
    assert ex_matching(5, 2) == 4
    assert ex_matching(10, 2) == 9
    with pytest.raises(UsageError):
        ex_matching(3, 2)


def test_two_paths_value_examples():
    r = two_paths_value(12, 5, 5)
    assert (r.value, r.branch) == (39, "clique-plus-extremal")
    r = two_paths_value(20, 7, 5)
    assert (r.value, r.branch) == (71, "h-graph")
    assert two_paths_value(18, 5, 5).branch == "h-graph"
    assert two_paths_value(18, 5, 5).value == 49
    assert two_paths_value(17, 5, 5).branch == "clique-plus-extremal"
    assert two_paths_value(17, 5, 5).value == 48


def test_two_paths_value_complete_clause():
    r = two_paths_value(8, 5, 5)
    assert (r.value, r.branch) == (28, "complete-graph")


def test_two_paths_value_rejects_bad_params():
    with pytest.raises(UsageError):
        two_paths_value(12, 6, 5)  # even order
    with pytest.raises(UsageError):
        two_paths_value(12, 5, 7)  # k1 < k2
    with pytest.raises(UsageError):
        two_paths_value(12, 3, 3)  # k2 not > 3


def test_conjecture_value_flag_difference():
    assert conjecture_value(12, (5, 5)) == 39
    assert conjecture_value(20, (7, 5)) == 71
    assert conjecture_value(20, (7, 5), "literal") == 67
    with pytest.raises(UsageError):
        conjecture_value(12, (5, 7))
    with pytest.raises(UsageError):
        conjecture_value(12, (3, 3))


def test_conjecture_agrees_with_two_paths_under_doubling():
    for k1, k2 in ((5, 5), (7, 5), (7, 7), (9, 5)):
        for n in range(k1 + k2, 80):
            assert conjecture_value(n, (k1, k2)) == two_paths_value(n, k1, k2).value


def test_f_conn_values():
    assert f_conn(12, 2, 2) == 32
    # the two h-levels evaluated independently; the larger is the level-(k1+k2-1) term
    assert f_conn(30, 2, 2) == max(h_formula(30, 9, 1), h_formula(30, 8, 3)) == 85
    with pytest.raises(UsageError):
        f_conn(8, 2, 2)


def test_g_value_examples():
    assert g_value(12, 2, 2) == 39 == two_paths_value(12, 5, 5).value
    assert g_value(20, 3, 2) == 71 == two_paths_value(20, 7, 5).value
    for k1 in range(2, 7):
        for k2 in range(2, k1 + 1):
            for n in range(2 * k1 + 2 * k2 + 1, 200):
                assert g_value(n, k1, k2) >= ex_path(n, 2 * k1 + 1)
                assert g_value(n, k1, k2) == two_paths_value(n, 2 * k1 + 1, 2 * k2 + 1).value


def test_thresholds():
    assert stability_threshold(12, 5) == 42
    assert kopylov_threshold(12, 10) == 45
    with pytest.raises(UsageError):
        stability_threshold(12, 4)
    with pytest.raises(UsageError):
        kopylov_threshold(12, 4)


def test_fan_bound():
    assert fan_bound(10, 6) == Fraction(29)
    assert fan_bound(4, 3) == Fraction(5)
    assert fan_bound(9, 6) == Fraction(51, 2)  # half-integer case
    with pytest.raises(UsageError):
        fan_bound(10, 2)


def test_p3_pair_readings_disagree():
    assert p3_pair_value(14, 2, "literal") == 24
    assert p3_pair_value(14, 2, "uniform") == 26
    with pytest.raises(UsageError):
        p3_pair_value(14, 2, "other")
    with pytest.raises(UsageError):
        p3_pair_value(8, 2, "literal")


def test_c_pair_expansion_identity():
    from math import comb

    for b in range(3, 8):
        for a in range(b, 12):
            for n in range(a + b - 1, 120):
                assert c_pair(n, a, b) == comb(a + b - 1, 2) + ex_path(n - a - b + 1, b)


def test_monotone_in_n():
    for n in range(12, 150):
        assert c_def(n + 1, 10, 5) >= c_def(n, 10, 5)
        assert c_small(n + 1, 8) >= c_small(n, 8)
        assert h_formula(n + 1, 10, 4) >= h_formula(n, 10, 4)
        assert ex_path(n + 1, 5) >= ex_path(n, 5)
        assert ex_matching(n + 1, 3) >= ex_matching(n, 3)
        assert two_paths_value(n + 1, 5, 5).value >= two_paths_value(n, 5, 5).value


def test_small_inequality_grids():
    assert prop_grid_33(max_k=6, max_n=80).verdict == "pass"
    assert prop_grid_34(max_k=6, max_n=80).verdict == "pass"
    assert prop_grid_35(max_k=6, max_n=80).verdict == "pass"
    assert identity_grids(max_k=6, max_n=80).verdict == "pass"
