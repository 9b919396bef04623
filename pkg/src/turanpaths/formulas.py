"""Closed-form extremal edge counts and thresholds.

All arithmetic is exact integer arithmetic; the two half-integer bounds are
returned as Fractions and compared internally in doubled integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UsageError
from .reports import CheckReport


def _c2(x: int) -> int:
    return x * (x - 1) // 2 if x > 1 else 0


def c_def(n: int, m: int, l: int) -> int:
    """Edges of K_{m-1} + t*K_{l-1} + K_r packing n vertices (complete graph below n=m)."""
    if not (m >= l >= 3):
        raise UsageError("need m >= l >= 3")
    if n < 0:
        raise UsageError("need n >= 0")
    if n <= m - 1:
        return _c2(n)
    t, r = divmod(n - m + 1, l - 1)
    return _c2(m - 1) + t * _c2(l - 1) + _c2(r)


def c_small(n: int, m: int) -> int:
    """Near-linear companion form: C(floor(m/2)-1, 2) + floor((m-2)/2) * (n - floor(m/2) + 1)."""
    if m < 4:
        raise UsageError("need m >= 4")
    if n < m // 2 - 1:
        raise UsageError("need n >= floor(m/2) - 1")
    return _c2(m // 2 - 1) + (m - 2) // 2 * (n - m // 2 + 1)


def h_formula(n: int, k: int, a: int) -> int:
    """Edge count of the clique-over-independent-set graph: C(k-a,2) + (n-k+a)a."""
    if a < 1 or k < 2 * a or n < k:
        raise UsageError("need n >= k >= 2a, a >= 1")
    return _c2(k - a) + (n - k + a) * a


def ex_path(n: int, k: int) -> int:
    """Maximum edges of an n-vertex graph with no k-vertex path: disjoint K_{k-1} blocks."""
    if k < 3:
        raise UsageError("need k >= 3")
    if n < 0:
        raise UsageError("need n >= 0")
    s, r = divmod(n, k - 1)
    return s * _c2(k - 1) + _c2(r)


def ex_path_eg_bound(n: int, k: int) -> tuple[Fraction, bool]:
    """Classical half-integer path bound (k-2)n/2 and whether equality is attained."""
    if not (n >= k >= 3):
        raise UsageError("need n >= k >= 3")
    return Fraction((k - 2) * n, 2), n % (k - 1) == 0


def ex_matching(n: int, t: int) -> int:
    """Maximum edges with no matching of size t."""
    if t < 1:
        raise UsageError("need t >= 1")
    if n < 2 * t:
        raise UsageError("need n >= 2t")
    return max(_c2(2 * t - 1), _c2(t - 1) + (t - 1) * (n - t + 1))


def c_pair(n: int, a: int, b: int) -> int:
    """Two-argument reading of the packing value: c_pair(n,a,b) = c_def(n, a+b, b)."""
    if not (a >= b >= 3):
        raise UsageError("need a >= b >= 3")
    return c_def(n, a + b, b)


@dataclass(frozen=True)
class ExtremalResult:
    value: int
    branch: str  # clique-plus-extremal | single-path | h-graph | complete-graph
    witness_family: str
    witness_params: dict

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "branch": self.branch,
            "witness": {"family": self.witness_family, "params": self.witness_params},
        }


def two_paths_value(n: int, k1: int, k2: int) -> ExtremalResult:
    """Extremal edge count for one k1-path plus one disjoint k2-path, k1 >= k2 > 3 odd.

    Ties in the max go to the first listed branch: clique-plus-extremal,
    single-path, h-graph.  Below n = k1 + k2 the complete graph is returned.
    """
    if not (k1 >= k2 > 3):
        raise UsageError("need k1 >= k2 > 3")
    if k1 % 2 == 0 or k2 % 2 == 0:
        raise UsageError("path orders must both be odd")
    if n < 0:
        raise UsageError("need n >= 0")
    if n < k1 + k2:
        return ExtremalResult(_c2(n), "complete-graph", "complete", {"n": n})
    a = k1 // 2 + k2 // 2 - 1
    branches = [
        ("clique-plus-extremal", c_pair(n, k1, k2), "pair-witness", {"n": n, "s": k1, "t": k2}),
        ("single-path", ex_path(n, k1), "path-extremal", {"n": n, "k": k1}),
        ("h-graph", h_formula(n, k1 + k2 - 2, a), "hnka", {"n": n, "k": k1 + k2 - 2, "a": a}),
    ]
    best = max(b[1] for b in branches)
    for name, value, fam, params in branches:
        if value == best:
            return ExtremalResult(value, name, fam, params)
    raise AssertionError("unreachable")


def conjecture_value(n: int, orders, interpretation: str = "doubled") -> int:
    """General path-forest candidate value: packing branches plus a half-order branch.

    interpretation selects the half-order branch argument: "literal" uses
    sum(floor(k_i/2)), "doubled" uses twice that.  The branch is skipped when
    the two-argument form's own preconditions fail at the chosen argument.
    """
    ks = list(orders)
    if not ks or any(k < 3 for k in ks):
        raise UsageError("all path orders must be >= 3")
    if sorted(ks, reverse=True) != ks:
        raise UsageError("path orders must be non-increasing")
    if ks[0] <= 3:
        raise UsageError("largest path order must exceed 3")
    if interpretation not in ("literal", "doubled"):
        raise UsageError("interpretation must be 'literal' or 'doubled'")
    if n < 0:
        raise UsageError("need n >= 0")
    values = []
    prefix = 0
    for k in ks:
        prefix += k
        values.append(c_def(n, prefix, k))
    half = sum(k // 2 for k in ks)
    arg = half if interpretation == "literal" else 2 * half
    extra = 1 if all(k % 2 for k in ks) else 0
    if arg >= 4 and n >= arg // 2 - 1:
        values.append(c_small(n, arg) + extra)
    return max(values)


def f_conn(n: int, k1: int, k2: int) -> int:
    """Connected-case bound: max of the two h-graph levels."""
    if not (k1 >= k2 >= 2):
        raise UsageError("need k1 >= k2 >= 2")
    if n < 2 * k1 + 2 * k2 + 1:
        raise UsageError("need n >= 2k1 + 2k2 + 1")
    return max(h_formula(n, 2 * k1 + 2 * k2 + 1, 1), h_formula(n, 2 * k1 + 2 * k2, k1 + k2 - 1))


def g_value(n: int, k1: int, k2: int) -> int:
    """Odd-orders value in (k1,k2) parameterization; equals two_paths_value(n, 2k1+1, 2k2+1)."""
    if not (k1 >= k2 >= 2):
        raise UsageError("need k1 >= k2 >= 2")
    if n < 2 * k1 + 2 * k2 + 1:
        raise UsageError("need n >= 2k1 + 2k2 + 1")
    return max(
        c_def(n, 2 * k1 + 2 * k2 + 2, 2 * k2 + 1),
        ex_path(n, 2 * k1 + 1),
        h_formula(n, 2 * k1 + 2 * k2, k1 + k2 - 1),
    )


def stability_threshold(n: int, k: int) -> int:
    """Edge threshold above which a 2-connected graph must contain a long-cycle witness family member."""
    if k < 5:
        raise UsageError("need k >= 5")
    if n < 2 * k + 1:
        raise UsageError("need n >= 2k + 1")
    return max(h_formula(n, 2 * k, k - 1), h_formula(n, 2 * k + 1, 2))


def kopylov_threshold(n: int, k: int) -> int:
    """Edge threshold forcing circumference >= k in 2-connected graphs."""
    if k < 5:
        raise UsageError("need k >= 5")
    if n < k:
        raise UsageError("need n >= k")
    return max(h_formula(n, k, k // 2), h_formula(n, k, 2))


def fan_bound(n: int, r: int) -> Fraction:
    """Half-integer edge bound (r-3)(n-2)/2 + 2n - 3 from the longest fixed-endpoint path order r."""
    if r < 3:
        raise UsageError("need r >= 3")
    if n < 1:
        raise UsageError("need n >= 1")
    return Fraction((r - 3) * (n - 2), 2) + 2 * n - 3


def p3_pair_value(n: int, ell: int, reading: str) -> int:
    """Value for a (2*ell+1)-path plus a disjoint 3-path, n > 2*ell + 4.

    reading="literal" takes the h-branch at level (2*ell, ell-1); "uniform"
    takes it at (2*ell+2, ell), the level consistent with the odd-pair family.
    The two disagree; see the adjudication driver in the oracle module.
    """
    if ell < 2:
        raise UsageError("need ell >= 2")
    if n <= 2 * ell + 4:
        raise UsageError("need n > 2*ell + 4")
    if reading == "literal":
        hb = h_formula(n, 2 * ell, ell - 1)
    elif reading == "uniform":
        hb = h_formula(n, 2 * ell + 2, ell)
    else:
        raise UsageError("reading must be 'literal' or 'uniform'")
    return max(c_pair(n, 2 * ell + 1, 3), ex_path(n, 2 * ell + 1), hb)


# -- pointwise inequality grids ------------------------------------------


def _ex_path_table(k: int, max_n: int) -> list[int]:
    tab = [0] * (max_n + 1)
    block = _c2(k - 1)
    for n in range(max_n + 1):
        s, r = divmod(n, k - 1)
        tab[n] = s * block + _c2(r)
    return tab


def prop_grid_33(max_k: int = 12, max_n: int = 300) -> CheckReport:
    """Split-off-one-component strict inequality against the packing branch."""
    params = {"max_k": max_k, "max_n": max_n}
    samples = 0
    for k2 in range(2, max_k + 1):
        ex_tab = _ex_path_table(2 * k2 + 1, max_n)
        for k1 in range(k2, max_k + 1):
            m, l = 2 * k1 + 2 * k2 + 2, 2 * k2 + 1
            cmin = 2 * k1 + 2 * k2 + 2
            cdef_tab = [c_def(n, m, l) for n in range(max_n + 1)]
            for csz in range(cmin, max_n + 1):
                lhs_base = h_formula(csz, 2 * k1 + 2 * k2 + 1, 1)
                for n in range(csz, max_n + 1):
                    samples += 1
                    if lhs_base + ex_tab[n - csz] >= cdef_tab[n]:
                        return CheckReport(
                            suite="prop33",
                            params=params,
                            verdict="violated",
                            samples=samples,
                            counterexample={
                                "point": {"k1": k1, "k2": k2, "component": csz, "n": n},
                                "lhs": lhs_base + ex_tab[n - csz],
                                "rhs": cdef_tab[n],
                            },
                        )
    return CheckReport(suite="prop33", params=params, verdict="pass", samples=samples)


def prop_grid_34(max_k: int = 12, max_n: int = 300) -> CheckReport:
    """Split-off-one-component inequality against the h-graph branch."""
    params = {"max_k": max_k, "max_n": max_n}
    samples = 0
    for k2 in range(2, max_k + 1):
        ex_tab = _ex_path_table(2 * k2 + 1, max_n)
        for k1 in range(k2, max_k + 1):
            kk, aa = 2 * k1 + 2 * k2, k1 + k2 - 1
            cmin = 2 * k1 + 2 * k2 + 2
            for csz in range(cmin, max_n + 1):
                lhs_base = h_formula(csz, kk, aa)
                for n in range(csz, max_n + 1):
                    samples += 1
                    if lhs_base + ex_tab[n - csz] > h_formula(n, kk, aa):
                        return CheckReport(
                            suite="prop34",
                            params=params,
                            verdict="violated",
                            samples=samples,
                            counterexample={
                                "point": {"k1": k1, "k2": k2, "component": csz, "n": n},
                                "lhs": lhs_base + ex_tab[n - csz],
                                "rhs": h_formula(n, kk, aa),
                            },
                        )
    return CheckReport(suite="prop34", params=params, verdict="pass", samples=samples)


def prop_grid_35(max_k: int = 12, max_n: int = 300) -> CheckReport:
    """Half-integer comparison (doubled): (k-2)(n-2) + 4n - 6 < 2*h(n, 2k, k-1) for n > 2k+1."""
    params = {"max_k": max_k, "max_n": max_n}
    samples = 0
    for k in range(5, max_k + 1):
        for n in range(2 * k + 2, max_n + 1):
            samples += 1
            lhs2 = (k - 2) * (n - 2) + 4 * n - 6
            rhs2 = 2 * h_formula(n, 2 * k, k - 1)
            if lhs2 >= rhs2:
                return CheckReport(
                    suite="prop35",
                    params=params,
                    verdict="violated",
                    samples=samples,
                    counterexample={"point": {"k": k, "n": n}, "doubled_lhs": lhs2, "doubled_rhs": rhs2},
                )
    return CheckReport(suite="prop35", params=params, verdict="pass", samples=samples)


def identity_grids(max_k: int = 12, max_n: int = 300) -> CheckReport:
    """Two exact identities tying the packing forms together.

    (1) c_pair(n,a,b) = C(a+b-1,2) + ex_path(n-a-b+1, b)  for 3 <= b <= a, n >= a+b-1
    (2) h(n,2m,m-1) = c_small(n,2m) + 1                   for m >= 2, n >= 2m
    """
    params = {"max_k": max_k, "max_n": max_n}
    samples = 0
    for b in range(3, max_n + 1):
        for a in range(b, max_n + 2 - b):
            head = _c2(a + b - 1)
            for n in range(a + b - 1, max_n + 1):
                samples += 1
                if c_pair(n, a, b) != head + ex_path(n - a - b + 1, b):
                    return CheckReport(
                        suite="identities",
                        params=params,
                        verdict="violated",
                        samples=samples,
                        counterexample={"identity": "c-pair-expansion", "point": {"a": a, "b": b, "n": n}},
                    )
    for m in range(2, 51):
        for n in range(2 * m, max_n + 1):
            samples += 1
            if h_formula(n, 2 * m, m - 1) != c_small(n, 2 * m) + 1:
                return CheckReport(
                    suite="identities",
                    params=params,
                    verdict="violated",
                    samples=samples,
                    counterexample={"identity": "h-vs-c-small", "point": {"m": m, "n": n}},
                )
    return CheckReport(suite="identities", params=params, verdict="pass", samples=samples)
