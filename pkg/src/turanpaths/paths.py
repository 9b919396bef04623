"""Exact search engines for paths, cycles, and vertex-disjoint path forests.

Every engine runs on a twin-collapsed quotient of the input graph: vertices
with identical neighborhoods are interchangeable, so a path in the graph is
exactly a capacity-respecting walk over twin classes (consecutive repeats of a
class are allowed only when the class is a clique).  On unstructured inputs the
quotient is trivial and the search is plain branch-and-bound DFS; on the
block-structured extremal graphs it collapses to a handful of classes, which is
what makes freeness checks on 20+ vertices instant.

All searches are deterministic: classes are ordered by smallest member and
walks are expanded to vertices by taking the smallest unused member.
"""

from __future__ import annotations

from .errors import CapabilityError, UsageError
from .graphs import Graph, induced_subgraph

SEARCH_CAP = 40
FOREST_ORDER_CAP = 24
PATTERN_CAP = 24


class _Quotient:
    __slots__ = ("members", "caps", "clique", "adj", "count")

    def __init__(self, members, caps, clique, adj):
        self.members = members
        self.caps = caps
        self.clique = clique
        self.adj = adj
        self.count = len(caps)


def _quotient(g: Graph) -> _Quotient:
    closed: dict[int, list[int]] = {}
    for v in range(g.n):
        closed.setdefault(g.rows[v] | (1 << v), []).append(v)
    raw: list[tuple[list[int], bool]] = []
    leftover = []
    for mem in closed.values():
        if len(mem) > 1:
            raw.append((mem, True))
        else:
            leftover.append(mem[0])
    open_: dict[int, list[int]] = {}
    for v in leftover:
        open_.setdefault(g.rows[v], []).append(v)
    for mem in open_.values():
        raw.append((mem, False))
    raw.sort(key=lambda t: t[0][0])
    members = tuple(tuple(mem) for mem, _ in raw)
    caps = [len(mem) for mem, _ in raw]
    clique = [cl for _, cl in raw]
    count = len(raw)
    adj = [0] * count
    for i in range(count):
        u = members[i][0]
        for j in range(i + 1, count):
            if g.has_edge(u, members[j][0]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return _Quotient(members, caps, clique, adj)


def _reach(adj: list[int], alive: int, start: int) -> int:
    """Classes reachable from the start mask through alive classes (start included)."""
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            j = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= adj[j]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def twin_classes(g: Graph) -> list[list[int]]:
    """Twin partition of the vertices (true twins first grouped, then false twins).

    Vertices in one class are interchangeable by an automorphism, so checking a
    property on one member per class (or one edge per class pair) is exact.
    """
    return [list(mem) for mem in _quotient(g).members]


def _class_of(q: _Quotient, v: int) -> int:
    for i, mem in enumerate(q.members):
        if v in mem:
            return i
    raise AssertionError("vertex not in any class")


def _expand(q: _Quotient, walk: list[int], pin_first: int | None = None, pin_last: int | None = None) -> tuple[int, ...]:
    """Lift a class walk to concrete vertices, smallest unused member first."""
    out: list[int | None] = [None] * len(walk)
    used = set()
    if pin_first is not None:
        out[0] = pin_first
        used.add(pin_first)
    if pin_last is not None and out[-1] is None:
        out[-1] = pin_last
        used.add(pin_last)
    for idx, i in enumerate(walk):
        if out[idx] is None:
            for v in q.members[i]:
                if v not in used:
                    out[idx] = v
                    used.add(v)
                    break
    return tuple(out)  # type: ignore[arg-type]


def _check_cap(g: Graph) -> None:
    if g.n > SEARCH_CAP:
        raise CapabilityError(f"search engines handle at most {SEARCH_CAP} vertices, got {g.n}")


def _longest_walk(g: Graph, stop: int, witness: bool):
    """Longest path order (capped at stop) plus a class-walk witness of the best."""
    q = _quotient(g)
    caps = q.caps[:]
    adj = q.adj
    clique = q.clique
    alive = (1 << q.count) - 1
    best = 0
    best_walk: list[int] = []
    stack: list[int] = []

    def rcaps(i: int) -> int:
        seen = _reach(adj, alive, 1 << i) & (alive | (1 << i))
        tot = 0
        s = seen & alive
        while s:
            j = (s & -s).bit_length() - 1
            s &= s - 1
            tot += caps[j]
        return tot

    def dfs(i: int, length: int) -> bool:
        nonlocal best, alive, best_walk
        stack.append(i)
        if length > best:
            best = length
            if witness:
                best_walk = stack[:]
            if best >= stop:
                return True
        if length + rcaps(i) <= best:
            stack.pop()
            return False
        if clique[i] and caps[i] > 0:
            caps[i] -= 1
            if caps[i] == 0:
                alive &= ~(1 << i)
            if dfs(i, length + 1):
                return True
            caps[i] += 1
            alive |= 1 << i
        m = adj[i] & alive
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            caps[j] -= 1
            if caps[j] == 0:
                alive &= ~(1 << j)
            if dfs(j, length + 1):
                return True
            caps[j] += 1
            alive |= 1 << j
        stack.pop()
        return False

    for i in range(q.count):
        caps[i] -= 1
        if caps[i] == 0:
            alive &= ~(1 << i)
        if dfs(i, 1):
            return best, best_walk, q
        caps[i] += 1
        alive |= 1 << i
        stack.clear()
    return best, best_walk, q


def longest_path(g: Graph, at_least: int | None = None) -> int:
    """Maximum order of a path; with at_least the search stops once that order is hit."""
    _check_cap(g)
    if g.n == 0:
        return 0
    stop = g.n if at_least is None else min(at_least, g.n)
    best, _, _ = _longest_walk(g, stop, witness=False)
    return best


def has_path_of_order(g: Graph, k: int) -> bool:
    if k < 1:
        raise UsageError("path order must be >= 1")
    return longest_path(g, at_least=k) >= k


def find_path_of_order(g: Graph, k: int):
    """The lexicographically smallest path on k vertices, or None."""
    if k < 1:
        raise UsageError("path order must be >= 1")
    _check_cap(g)
    if k > g.n or not has_path_of_order(g, k):
        return None
    if k == 1:
        return (0,)
    rows = g.rows
    full = (1 << g.n) - 1
    path: list[int] = []

    def dfs(v: int, used: int) -> bool:
        path.append(v)
        if len(path) == k:
            return True
        cand = rows[v] & ~used
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            u2 = used | (1 << w)
            avail = _vreach(rows, full, w, u2) & ~u2
            if bin(avail).count("1") + 1 >= k - len(path):
                if dfs(w, u2):
                    return True
        path.pop()
        return False

    for s in range(g.n):
        if dfs(s, 1 << s):
            return tuple(path)
        path.clear()
    raise AssertionError("decision said a path exists")


def longest_path_between(g: Graph, a: int, b: int) -> int:
    """Maximum order of a path with endpoints exactly a and b (0 if none)."""
    _check_cap(g)
    if not (0 <= a < g.n and 0 <= b < g.n) or a == b:
        raise UsageError("need two distinct vertices")
    q = _quotient(g)
    ca = _class_of(q, a)
    cb = _class_of(q, b)
    caps = q.caps[:]
    adj = q.adj
    clique = q.clique
    alive = (1 << q.count) - 1
    best = 0

    def rmask(i: int) -> int:
        return _reach(adj, alive, 1 << i)

    def dfs(i: int, length: int) -> bool:
        nonlocal best, alive
        if i == cb and length >= 2:
            if length > best:
                best = length
                if best >= g.n:
                    return True
        seen = rmask(i)
        if i != cb and not (caps[cb] > 0 and (seen >> cb) & 1):
            return False  # the target class cannot be reached any more
        tot = 0
        s = seen & alive
        while s:
            j = (s & -s).bit_length() - 1
            s &= s - 1
            tot += caps[j]
        if length + tot <= best:
            return False
        if clique[i] and caps[i] > 0:
            caps[i] -= 1
            if caps[i] == 0:
                alive &= ~(1 << i)
            if dfs(i, length + 1):
                return True
            caps[i] += 1
            alive |= 1 << i
        m = adj[i] & alive
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            caps[j] -= 1
            if caps[j] == 0:
                alive &= ~(1 << j)
            if dfs(j, length + 1):
                return True
            caps[j] += 1
            alive |= 1 << j
        return False

    caps[ca] -= 1
    if caps[ca] == 0:
        alive &= ~(1 << ca)
    dfs(ca, 1)
    return best


def _exact_between(g: Graph, a: int, b: int, m: int) -> bool:
    """Is there a path on exactly m vertices from a to b?  Class-walk decision."""
    q = _quotient(g)
    ca = _class_of(q, a)
    cb = _class_of(q, b)
    caps = q.caps[:]
    adj = q.adj
    clique = q.clique
    alive = (1 << q.count) - 1

    def dfs(i: int, length: int) -> bool:
        nonlocal alive
        if length == m:
            return i == cb
        if caps[cb] == 0:
            return False  # the final slot needs a fresh member of b's class
        seen = _reach(adj, alive, 1 << i)
        if not (seen >> cb) & 1:
            return False
        tot = 0
        s = seen & alive
        while s:
            j = (s & -s).bit_length() - 1
            s &= s - 1
            tot += caps[j]
        if length + tot < m:
            return False
        if clique[i] and caps[i] > 0:
            caps[i] -= 1
            if caps[i] == 0:
                alive &= ~(1 << i)
            if dfs(i, length + 1):
                return True
            caps[i] += 1
            alive |= 1 << i
        mm = adj[i] & alive
        while mm:
            j = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            caps[j] -= 1
            if caps[j] == 0:
                alive &= ~(1 << j)
            if dfs(j, length + 1):
                return True
            caps[j] += 1
            alive |= 1 << j
        return False

    caps[ca] -= 1
    if caps[ca] == 0:
        alive &= ~(1 << ca)
    return dfs(ca, 1)


def has_path_of_order_between(g: Graph, a: int, b: int, m: int) -> bool:
    """Exact-order decision: a path on exactly m vertices with endpoints a and b."""
    _check_cap(g)
    if not (0 <= a < g.n and 0 <= b < g.n) or a == b:
        raise UsageError("need two distinct vertices")
    if m < 2:
        raise UsageError("need m >= 2")
    if m > g.n:
        return False
    return _exact_between(g, a, b, m)


def _vreach(rows: tuple, full: int, start: int, used: int) -> int:
    """Vertices reachable from start through unused vertices, start included."""
    alive = full & ~used
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            w = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= rows[w]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def path_of_order_between(g: Graph, a: int, b: int, m: int):
    """Lexicographically smallest path a..b on exactly m vertices, or None."""
    if not has_path_of_order_between(g, a, b, m):
        return None
    rows = g.rows
    full = (1 << g.n) - 1
    tbit = 1 << b
    path = [a]

    def dfs(v: int, used: int) -> bool:
        left = m - len(path)
        if left == 1:
            if rows[v] & ~used & tbit:
                path.append(b)
                return True
            return False
        cand = rows[v] & ~used & ~tbit
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            u2 = used | (1 << w)
            avail = _vreach(rows, full, w, u2) & ~u2
            if avail & tbit and bin(avail).count("1") >= left - 1:
                path.append(w)
                if dfs(w, u2):
                    return True
                path.pop()
        return False

    if dfs(a, 1 << a):
        return tuple(path)
    return None


def edge_in_cycle_of_length(g: Graph, e: tuple, length: int) -> bool:
    """Does the edge e lie on a cycle with exactly `length` vertices?"""
    u, v = e
    if u == v or not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise UsageError("e must be an edge of g")
    if length < 3:
        raise UsageError("cycle length must be >= 3")
    _check_cap(g)
    if length > g.n:
        return False
    # a cycle of that length through uv is exactly a u..v path on `length` vertices
    return _exact_between(g, u, v, length)


def _cycle_search(g: Graph, stop: int, witness: bool):
    q = _quotient(g)
    adj = q.adj
    clique = q.clique
    best = 0
    best_walk: list[int] = []

    for r in range(q.count):
        if best >= stop:
            break
        mask_ge = ~((1 << r) - 1)
        caps = q.caps[:]
        alive = ((1 << q.count) - 1) & mask_ge
        closers = 0
        for j in range(r, q.count):
            if (adj[j] >> r) & 1:
                closers |= 1 << j
        if clique[r] and q.caps[r] >= 2:
            closers |= 1 << r
        if not closers:
            continue
        stack: list[int] = []

        def dfs(i: int, length: int) -> bool:
            nonlocal best, alive, best_walk
            stack.append(i)
            if length >= 3 and (closers >> i) & 1 and length > best:
                best = length
                if witness:
                    best_walk = stack[:]
                if best >= stop:
                    return True
            seen = _reach(adj, alive & mask_ge, 1 << i)
            if not (seen & closers):
                stack.pop()
                return False
            tot = 0
            s = seen & alive
            while s:
                j = (s & -s).bit_length() - 1
                s &= s - 1
                tot += caps[j]
            if length + tot <= best:
                stack.pop()
                return False
            if clique[i] and caps[i] > 0:
                caps[i] -= 1
                if caps[i] == 0:
                    alive &= ~(1 << i)
                if dfs(i, length + 1):
                    return True
                caps[i] += 1
                alive |= 1 << i
            m = adj[i] & alive & mask_ge
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                caps[j] -= 1
                if caps[j] == 0:
                    alive &= ~(1 << j)
                if dfs(j, length + 1):
                    return True
                caps[j] += 1
                alive |= 1 << j
            stack.pop()
            return False

        caps[r] -= 1
        if caps[r] == 0:
            alive &= ~(1 << r)
        if dfs(r, 1):
            return best, best_walk, q
    return best, best_walk, q


def circumference(g: Graph, at_least: int | None = None) -> int:
    """Length of a longest cycle, 0 for forests; at_least stops the search early."""
    _check_cap(g)
    if g.n < 3:
        return 0
    stop = g.n if at_least is None else min(at_least, g.n)
    best, _, _ = _cycle_search(g, stop, witness=False)
    return best


def exists_cycle_at_least(g: Graph, length: int) -> bool:
    if length < 3:
        raise UsageError("cycle length must be >= 3")
    return circumference(g, at_least=length) >= length


def find_cycle_at_least(g: Graph, length: int):
    """The lexicographically smallest cycle witness of at least the given length, or None.

    The returned tuple starts at the cycle's smallest vertex; among qualifying
    cycles the whole vertex sequence is lexicographically minimal.
    """
    if length < 3:
        raise UsageError("cycle length must be >= 3")
    _check_cap(g)
    if g.n < 3 or length > g.n or not exists_cycle_at_least(g, length):
        return None
    rows = g.rows
    full = (1 << g.n) - 1
    path: list[int] = []

    def dfs(root: int, v: int, used: int) -> bool:
        path.append(v)
        if len(path) >= length and (rows[v] >> root) & 1:
            return True
        cand = rows[v] & ~used
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            u2 = used | (1 << w)
            # the closing root must stay reachable and enough vertices must remain;
            # letting the reach pass through root only overestimates, which is safe
            back = _vreach(rows, full, w, u2 & ~(1 << root))
            if (back >> root) & 1 and bin(back & ~u2).count("1") + 1 >= length - len(path):
                if dfs(root, w, u2):
                    return True
        path.pop()
        return False

    for r in range(g.n):
        # only cycles whose minimum vertex is r: restrict to higher-numbered vertices
        allowed = full & ~((1 << (r + 1)) - 1)
        if dfs(r, r, (1 << r) | (full & ~allowed)):
            return tuple(path)
        path.clear()
    raise AssertionError("decision said a cycle exists")


def is_hamiltonian(g: Graph) -> bool:
    if g.n < 3:
        return False
    return circumference(g, at_least=g.n) == g.n


def _forest_search(g: Graph, orders: tuple[int, ...], witness: bool):
    q = _quotient(g)
    caps = q.caps[:]
    adj = q.adj
    clique = q.clique
    alive = (1 << q.count) - 1
    remaining = [sum(orders[i:]) for i in range(len(orders))] + [0]
    total = sum(caps)
    walks: list[list[int]] = [[] for _ in orders]
    # Dead ends depend only on the part index, the start bound, and the
    # capacity state, so failed placements are memoized on that key.  Paths of
    # equal order are interchangeable, so their start classes may be assumed
    # non-decreasing; every solution can be reordered to satisfy that.
    failed: set[tuple] = set()

    def rcaps(i: int) -> int:
        # capacity reachable from class i through alive classes, fused BFS
        seen = frontier = 1 << i
        tot = caps[i]
        while frontier:
            nxt = 0
            f = frontier
            while f:
                j = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= adj[j]
            nxt &= alive & ~seen
            f = nxt
            while f:
                j = (f & -f).bit_length() - 1
                f &= f - 1
                tot += caps[j]
            seen |= nxt
            frontier = nxt
        return tot

    def place(idx: int) -> bool:
        nonlocal total, alive
        if idx == len(orders):
            return True
        if total < remaining[idx]:
            return False
        k = orders[idx]
        start_lo = walks[idx - 1][0] if idx > 0 and orders[idx - 1] == k else 0
        key = (idx, start_lo, tuple(caps))
        if key in failed:
            return False
        stack = walks[idx]

        def walk(i: int, length: int) -> bool:
            nonlocal alive, total
            stack.append(i)
            if length == k:
                if place(idx + 1):
                    return True
                stack.pop()
                return False
            if length + rcaps(i) < k:
                stack.pop()
                return False
            if clique[i] and caps[i] > 0:
                caps[i] -= 1
                total -= 1
                if caps[i] == 0:
                    alive &= ~(1 << i)
                if walk(i, length + 1):
                    return True
                caps[i] += 1
                total += 1
                alive |= 1 << i
            m = adj[i] & alive
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                caps[j] -= 1
                total -= 1
                if caps[j] == 0:
                    alive &= ~(1 << j)
                if walk(j, length + 1):
                    return True
                caps[j] += 1
                total += 1
                alive |= 1 << j
            stack.pop()
            return False

        for s in range(start_lo, q.count):
            if caps[s] == 0:
                continue
            caps[s] -= 1
            total -= 1
            if caps[s] == 0:
                alive &= ~(1 << s)
            if walk(s, 1):
                return True
            caps[s] += 1
            total += 1
            alive |= 1 << s
            stack.clear()
        if len(failed) < 1_000_000:
            failed.add(key)
        return False

    ok = place(0)
    return ok, walks, q


def _normalize_orders(orders) -> tuple[int, ...]:
    out = tuple(sorted((int(k) for k in orders), reverse=True))
    if not out:
        raise UsageError("need at least one path order")
    if out[-1] < 1:
        raise UsageError("path orders must be >= 1")
    if sum(out) > FOREST_ORDER_CAP:
        raise CapabilityError(f"forest search handles total order at most {FOREST_ORDER_CAP}")
    return out


def contains_forest(g: Graph, orders) -> bool:
    """Does g contain vertex-disjoint paths with the given orders?"""
    ks = _normalize_orders(orders)
    _check_cap(g)
    if sum(ks) > g.n:
        return False
    ok, _, _ = _forest_search(g, ks, witness=False)
    return ok


def _find_forest_fast(g: Graph, orders):
    """First witness from the class-walk search; deterministic but not lex-minimal."""
    ks = _normalize_orders(orders)
    _check_cap(g)
    if sum(ks) > g.n:
        return None
    ok, walks, q = _forest_search(g, ks, witness=True)
    if not ok:
        return None
    out = []
    used: set[int] = set()
    for wk in walks:
        path = []
        for i in wk:
            for v in q.members[i]:
                if v not in used:
                    path.append(v)
                    used.add(v)
                    break
        out.append(tuple(path))
    return tuple(out)


def find_forest(g: Graph, orders):
    """Lexicographically smallest disjoint-path witness (orders descending), or None.

    Part sequences are compared in order, so the first path is the lex-min one
    that still leaves room for the rest.
    """
    ks = _normalize_orders(orders)
    _check_cap(g)
    if sum(ks) > g.n or not contains_forest(g, ks):
        return None
    rows = g.rows
    full = (1 << g.n) - 1
    rest_memo: dict[tuple[int, int], bool] = {}

    def rest_ok(used: int, idx: int) -> bool:
        if idx == len(ks):
            return True
        key = (used, idx)
        hit = rest_memo.get(key)
        if hit is None:
            free = [w for w in range(g.n) if not (used >> w) & 1]
            hit = contains_forest(induced_subgraph(g, free), ks[idx:])
            rest_memo[key] = hit
        return hit

    parts: list[tuple[int, ...]] = []

    def place(idx: int, used: int) -> bool:
        if idx == len(ks):
            return True
        k = ks[idx]
        path: list[int] = []

        def dfs(v: int, u2: int) -> bool:
            path.append(v)
            if len(path) == k:
                if rest_ok(u2, idx + 1) and place(idx + 1, u2):
                    parts.insert(idx, tuple(path))
                    return True
                path.pop()
                return False
            cand = rows[v] & ~u2
            while cand:
                w = (cand & -cand).bit_length() - 1
                cand &= cand - 1
                u3 = u2 | (1 << w)
                avail = _vreach(rows, full, w, u3) & ~u3
                if bin(avail).count("1") + 1 >= k - len(path):
                    if dfs(w, u3):
                        return True
            path.pop()
            return False

        for s in range(g.n):
            if (used >> s) & 1:
                continue
            if dfs(s, used | (1 << s)):
                return True
            path.clear()
        return False

    if not place(0, 0):
        raise AssertionError("decision said a forest exists")
    return tuple(parts)


def creates_forest_on_add(g: Graph, u: int, v: int, orders) -> bool:
    """Would adding the edge uv to a forest-free g create the forest?

    Only forests through the new edge need checking, which keeps the test cheap
    enough to sit inside a local-search inner loop.
    """
    ks = _normalize_orders(orders)
    _check_cap(g)
    if g.has_edge(u, v) or u == v:
        raise UsageError("uv must be a non-edge")
    if sum(ks) > g.n:
        return False
    g2 = g.with_edge(u, v)
    rows = g2.rows
    full = (1 << g2.n) - 1
    forest_memo: dict[tuple[int, tuple[int, ...]], bool] = {}

    def rest_ok(used_mask: int, rest: tuple[int, ...]) -> bool:
        if not rest:
            return True
        key = (used_mask, rest)
        hit = forest_memo.get(key)
        if hit is None:
            free = [w for w in range(g2.n) if not (used_mask >> w) & 1]
            hit = contains_forest(induced_subgraph(g2, free), rest)
            forest_memo[key] = hit
        return hit

    def right_paths(start: int, blocked: int, r: int, rest: tuple[int, ...]) -> bool:
        # extend from start over vertices not in blocked; r vertices still to place
        if r == 1:
            return rest_ok(blocked | (1 << start), rest)
        m = rows[start] & ~blocked & ~(1 << start)
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if right_paths(w, blocked | (1 << start), r - 1, rest):
                return True
        return False

    def left_paths(end: int, blocked: int, l: int, r: int, rest: tuple[int, ...]) -> bool:
        # grow the left side backwards from u; when done, grow the right side from v
        if l == 1:
            return right_paths(v, blocked | (1 << end), r, rest)
        m = rows[end] & ~blocked & ~(1 << end) & ~(1 << v)
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if left_paths(w, blocked | (1 << end), l - 1, r, rest):
                return True
        return False

    tried = set()
    for idx, k in enumerate(ks):
        if k in tried:
            continue
        tried.add(k)
        rest = ks[:idx] + ks[idx + 1:]
        if k == 1:
            # a single vertex cannot use the edge; forest must exist without uv
            continue
        for l in range(1, k):
            if left_paths(u, 0, l, k - l, rest):
                return True
    return False


def contains_subgraph(g: Graph, h: Graph) -> bool:
    """Is there an injection of V(h) into V(g) sending every edge of h to an edge of g?"""
    if h.n > PATTERN_CAP:
        raise CapabilityError(f"pattern graphs handle at most {PATTERN_CAP} vertices, got {h.n}")
    _check_cap(g)
    if h.n > g.n or h.edge_count() > g.edge_count():
        return False
    hdeg = sorted((h.degree(x) for x in range(h.n)), reverse=True)
    gdeg = sorted((g.degree(x) for x in range(g.n)), reverse=True)
    if any(hd > gd for hd, gd in zip(hdeg, gdeg)):
        return False

    # process pattern vertices in a connectivity-respecting order, high degree first
    order: list[int] = []
    placed = set()
    while len(order) < h.n:
        cands = [x for x in range(h.n) if x not in placed]
        attached = [x for x in cands if any(y in placed for y in h.neighbors(x))]
        pool = attached or cands
        nxt = max(pool, key=lambda x: (h.degree(x), -x))
        order.append(nxt)
        placed.add(nxt)

    mapping = [-1] * h.n
    used = 0

    def dfs(pos: int) -> bool:
        nonlocal used
        if pos == h.n:
            return True
        x = order[pos]
        need = [mapping[y] for y in h.neighbors(x) if mapping[y] >= 0]
        dx = h.degree(x)
        for cand in range(g.n):
            if (used >> cand) & 1 or g.degree(cand) < dx:
                continue
            if all(g.has_edge(cand, w) for w in need):
                mapping[x] = cand
                used |= 1 << cand
                if dfs(pos + 1):
                    return True
                mapping[x] = -1
                used &= ~(1 << cand)
        return False

    return dfs(0)


def posa_bound(g: Graph, witness) -> int:
    """min(m+1, d_P(x) + d_P(y)) for a supplied path witness with m edges.

    Path-degrees are counted against the witness: neighbors in g that lie on
    the path, endpoints included.
    """
    w = tuple(witness)
    if not w:
        raise UsageError("witness path must be nonempty")
    if len(set(w)) != len(w):
        raise UsageError("witness path repeats a vertex")
    for v in w:
        if not (0 <= v < g.n):
            raise UsageError("witness vertex out of range")
    for u, v in zip(w, w[1:]):
        if not g.has_edge(u, v):
            raise UsageError(f"witness pair {u},{v} is not an edge")
    pset = set(w)
    dx = sum(1 for z in g.neighbors(w[0]) if z in pset)
    dy = sum(1 for z in g.neighbors(w[-1]) if z in pset)
    return min(len(w), dx + dy)


def alpha_disintegration(g: Graph, alpha: int):
    """Recursively delete minimum-index vertices of degree <= alpha until none remain.

    Returns (remaining vertices sorted, deletion trace in order).  The fixpoint
    is schedule-independent; the trace records this particular schedule.
    """
    alive = (1 << g.n) - 1
    trace: list[int] = []
    while alive:
        pick = -1
        m = alive
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if bin(g.rows[v] & alive).count("1") <= alpha:
                pick = v
                break
        if pick < 0:
            break
        alive &= ~(1 << pick)
        trace.append(pick)
    remaining = tuple(v for v in range(g.n) if (alive >> v) & 1)
    return remaining, tuple(trace)


def contains_family_F(g: Graph, k: int) -> str:
    """First member of the forbidden family found in g: a long cycle or one of
    the three decorated graphs; "none" when g avoids them all."""
    if k < 4:
        raise UsageError("need k >= 4")
    _check_cap(g)
    if g.n >= 2 * k + 1 and exists_cycle_at_least(g, 2 * k + 1):
        return "cycle>=2k+1"
    from .constructions import build_HkM2, build_HkP3, build_Hks

    for name, built in (
        ("Hk1", build_Hks(k, 1)),
        ("HkM2", build_HkM2(k)),
        ("HkP3", build_HkP3(k)),
    ):
        if built.graph.n <= g.n and contains_subgraph(g, built.graph):
            return name
    return "none"
