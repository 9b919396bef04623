"""Builders for the named extremal families.

Each builder returns a Construction: the graph itself plus per-vertex role
labels, so the CLI can emit DOT with the block structure visible.  Builders
validate their parameter ranges and raise UsageError on bad input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError
from .formulas import _c2
from .graphs import Graph, dot_encode, graph6_encode


@dataclass
class Construction:
    family: str
    params: dict
    graph: Graph
    roles: tuple[str, ...]

    def role_groups(self) -> dict[str, list[int]]:
        groups: dict[str, list[int]] = {}
        for v, r in enumerate(self.roles):
            groups.setdefault(r, []).append(v)
        return groups

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "n": self.graph.n,
            "edges": self.graph.edge_count(),
            "graph6": graph6_encode(self.graph),
            "roles": self.role_groups(),
        }

    def to_dot(self) -> str:
        return dot_encode(self.graph, roles=dict(enumerate(self.roles)), name=self.family.replace("-", "_"))


def build_H(n: int, k: int, a: int) -> Construction:
    """Clique K_{k-2a} + connector clique B of size a dominating an independent set."""
    if a < 1 or k < 2 * a or n < k:
        raise UsageError("need n >= k >= 2a, a >= 1")
    # layout: A = [0, k-2a), B = [k-2a, k-a), C = [k-a, n)
    mask_all = (1 << n) - 1
    mask_ab = (1 << (k - a)) - 1
    mask_b = mask_ab ^ ((1 << (k - 2 * a)) - 1)
    rows = []
    for v in range(n):
        if v < k - a:
            m = mask_ab
            if v >= k - 2 * a:
                m |= mask_all ^ mask_ab
        else:
            m = mask_b
        rows.append(m & ~(1 << v))
    roles = ("A",) * (k - 2 * a) + ("B",) * a + ("C",) * (n - k + a)
    return Construction("hnka", {"n": n, "k": k, "a": a}, Graph(n, tuple(rows)), roles)


def build_Z(n: int, k: int, t: int) -> Construction:
    """Two universal apexes over K_{k-t-2} plus parallel copies of K_{t-1}."""
    if t < 2:
        raise UsageError("need t >= 2")
    if k < t + 2:
        raise UsageError("need k >= t + 2")
    core = k - t - 2
    rest = n - 2 - core
    if rest < 0 or rest % (t - 1) != 0:
        raise UsageError("need n - k + t divisible by t - 1 and nonnegative")
    copies = rest // (t - 1)
    if copies < 2:
        raise UsageError("need at least two K_{t-1} copies")
    mask_all = (1 << n) - 1
    rows = [mask_all & ~1, mask_all & ~2]
    mask_core = ((1 << (2 + core)) - 1) ^ 3
    for v in range(2, 2 + core):
        rows.append((mask_core | 3) & ~(1 << v))
    base = 2 + core
    for _ in range(copies):
        mask_piece = ((1 << (t - 1)) - 1) << base
        for v in range(base, base + t - 1):
            rows.append((mask_piece | 3) & ~(1 << v))
        base += t - 1
    roles = ("apex", "apex") + ("core",) * core + ("piece",) * (copies * (t - 1))
    return Construction("znkt", {"n": n, "k": k, "t": t}, Graph(n, tuple(rows)), roles)


def build_Hks(k: int, s: int) -> Construction:
    """Spanning path x_1..x_{2k+1} with end cliques of size s fully joined to the odd interior."""
    if k < 4 or not (1 <= s <= k - 1):
        raise UsageError("need k >= 4 and 1 <= s <= k - 1")
    n = 2 * k + 1
    edges = [(i, i + 1) for i in range(n - 1)]
    a_set = list(range(s))
    b_set = list(range(n - s, n))
    c_set = list(range(s, 2 * k - s + 1, 2))  # positions s+1, s+3, .., 2k-s+1 (1-based)
    for grp in (a_set, b_set):
        for i in range(len(grp)):
            for j in range(i + 1, len(grp)):
                edges.append((grp[i], grp[j]))
    for u in a_set + b_set:
        for w in c_set:
            if u != w:
                edges.append((u, w))
    g = Graph.from_edges(n, set(tuple(sorted(e)) for e in edges))
    roles = ["D"] * n
    for v in a_set:
        roles[v] = "A"
    for v in b_set:
        roles[v] = "B"
    for v in c_set:
        roles[v] = "C"
    return Construction("hks", {"k": k, "s": s}, g, tuple(roles))


def build_HkM2(k: int) -> Construction:
    """K_{k-1,k+2} with a 2-edge matching in the large side (close C x D over the s=2 path form).

    The small side is C; the large side splits into the matched pairs A = {x_1,x_2},
    B = {x_2k,x_2k+1} and the rest D, inheriting the decorated-path labels.
    """
    if k < 4:
        raise UsageError("need k >= 4")
    base = build_Hks(k, 2)
    groups = base.role_groups()
    edges = set(base.graph.edges())
    for c in groups["C"]:
        for d in groups["D"]:
            edges.add((min(c, d), max(c, d)))
    g = Graph.from_edges(2 * k + 1, edges)
    return Construction("hkm2", {"k": k}, g, base.roles)


def build_HkP3(k: int) -> Construction:
    """K_{k-1,k+2} plus a path a_1 a_2 a_3 inside the large side.

    Large side = {a_1,a_2,a_3} plus C = {c_1..c_{k-1}}; small side = B = {b_1..b_{k-1}}.
    """
    if k < 4:
        raise UsageError("need k >= 4")
    n = 2 * k + 1
    b_set = list(range(3, k + 2))
    c_set = list(range(k + 2, n))
    edges = [(u, w) for u in b_set for w in [0, 1, 2] + c_set]
    edges += [(0, 1), (1, 2)]
    g = Graph.from_edges(n, edges)
    roles = ("a1", "a2", "a3") + ("B",) * (k - 1) + ("C",) * (k - 1)
    return Construction("hkp3", {"k": k}, g, roles)


def build_Fkt(k: int, t: int) -> Construction:
    """Spanning path x_1..x_{2k+t} with end cliques of size k cross-joined at the seam."""
    if k < 3 or t < 2:
        raise UsageError("need k >= 3 and t >= 2")
    n = 2 * k + t
    edges = [(i, i + 1) for i in range(n - 1)]
    a_set = list(range(k))
    b_set = list(range(k + t, n))
    for grp in (a_set, b_set):
        for i in range(len(grp)):
            for j in range(i + 1, len(grp)):
                edges.append((grp[i], grp[j]))
    edges += [(k - 1, w) for w in b_set]  # x_k to every B vertex
    edges += [(k + t, u) for u in a_set]  # x_{k+t+1} to every A vertex
    g = Graph.from_edges(n, set(tuple(sorted(e)) for e in edges if e[0] != e[1]))
    roles = ("A",) * k + ("C",) * t + ("B",) * k
    return Construction("fkt", {"k": k, "t": t}, g, roles)


def build_path_extremal(n: int, k: int) -> Construction:
    """Disjoint K_{k-1} blocks plus one remainder clique: no path on k vertices."""
    if k < 3:
        raise UsageError("need k >= 3")
    if n < 0:
        raise UsageError("need n >= 0")
    s, r = divmod(n, k - 1)
    rows = []
    roles = []
    base = 0
    for _ in range(s):
        mask = ((1 << (k - 1)) - 1) << base
        for v in range(base, base + k - 1):
            rows.append(mask & ~(1 << v))
            roles.append("block")
        base += k - 1
    mask = ((1 << r) - 1) << base
    for v in range(base, base + r):
        rows.append(mask & ~(1 << v))
        roles.append("rest")
    return Construction("path-extremal", {"n": n, "k": k}, Graph(n, tuple(rows)), tuple(roles))


def build_pair_witness(n: int, s: int, t: int) -> Construction:
    """K_{s+t-1} next to a path-extremal remainder: blocks the (s,t) path pair."""
    if not (s >= t >= 3):
        raise UsageError("need s >= t >= 3")
    if n < s + t - 1:
        raise UsageError("need n >= s + t - 1")
    head = Graph.complete(s + t - 1)
    tail = build_path_extremal(n - s - t + 1, t)
    g = head.disjoint_union(tail.graph)
    roles = ("clique",) * (s + t - 1) + tail.roles
    return Construction("pair-witness", {"n": n, "s": s, "t": t}, g, roles)


def build_turan(n: int, r: int) -> Construction:
    """Balanced complete multipartite graph on r parts."""
    if r < 1 or n < 0:
        raise UsageError("need r >= 1 and n >= 0")
    sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
    mask_all = (1 << n) - 1
    rows = []
    roles = []
    base = 0
    for i, sz in enumerate(sizes):
        part_mask = ((1 << sz) - 1) << base
        for v in range(base, base + sz):
            rows.append(mask_all & ~part_mask)
            roles.append(f"part{i}")
        base += sz
    return Construction("turan", {"n": n, "r": r}, Graph(n, tuple(rows)), tuple(roles))


BUILDERS = {
    "hnka": (build_H, ("n", "k", "a")),
    "znkt": (build_Z, ("n", "k", "t")),
    "hks": (build_Hks, ("k", "s")),
    "hkm2": (build_HkM2, ("k",)),
    "hkp3": (build_HkP3, ("k",)),
    "fkt": (build_Fkt, ("k", "t")),
    "path-extremal": (build_path_extremal, ("n", "k")),
    "pair-witness": (build_pair_witness, ("n", "s", "t")),
    "turan": (build_turan, ("n", "r")),
}


def expected_edges(family: str, params: dict) -> int:
    """Closed-form edge count for each family, used to certify the builders."""
    p = params
    if family == "hnka":
        return _c2(p["k"] - p["a"]) + (p["n"] - p["k"] + p["a"]) * p["a"]
    if family == "znkt":
        n, k, t = p["n"], p["k"], p["t"]
        copies = (n - k + t) // (t - 1)
        return 1 + 2 * (n - 2) + _c2(k - t - 2) + copies * _c2(t - 1)
    if family == "hks":
        k, s = p["k"], p["s"]
        # 2k path edges, of which 2(s-1) lie inside the end cliques and 2 inside the join
        return 2 * _c2(s) + 2 * s * (k - s + 1) + 2 * (k - s)
    if family == "hkm2":
        return (p["k"] - 1) * (p["k"] + 2) + 2
    if family == "hkp3":
        return (p["k"] - 1) * (p["k"] + 2) + 2
    if family == "fkt":
        k, t = p["k"], p["t"]
        # 2C(k,2) clique edges + 2k-1 seam joins + t+1 path edges outside the cliques
        return 2 * _c2(k) + 2 * k + t
    if family == "path-extremal":
        n, k = p["n"], p["k"]
        s, r = divmod(n, k - 1)
        return s * _c2(k - 1) + _c2(r)
    if family == "pair-witness":
        n, s, t = p["n"], p["s"], p["t"]
        q, r = divmod(n - s - t + 1, t - 1)
        return _c2(s + t - 1) + q * _c2(t - 1) + _c2(r)
    if family == "turan":
        n, r = p["n"], p["r"]
        return _c2(n) - sum(_c2(n // r + (1 if i < n % r else 0)) for i in range(r))
    raise UsageError(f"unknown family {family!r}")
