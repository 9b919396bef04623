"""Dense simple-graph core.

Graphs are immutable: order n plus one adjacency bitmask per vertex (Python
ints double as arbitrary-width bit rows).  Everything downstream -- the exact
search engines, the extremal constructions, the certification oracles -- works
on this one representation.
"""

from __future__ import annotations

from .errors import CapabilityError, Graph6Error, UsageError

CANONICAL_CAP = 64


class Graph:
    """Undirected simple graph on vertices 0..n-1 with bitmask adjacency rows."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: tuple[int, ...]):
        self.n = n
        self.rows = rows

    @classmethod
    def empty(cls, n: int) -> "Graph":
        if n < 0:
            raise UsageError("order must be >= 0")
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        if n < 0:
            raise UsageError("order must be >= 0")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise UsageError(f"loop at vertex {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    # -- basic queries ----------------------------------------------------

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.rows), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def edges(self):
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield (u, v)
                row >>= 1
                v += 1

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise UsageError(f"bad edge ({u},{v})")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        rows = list(self.rows) + [r << shift for r in other.rows]
        return Graph(self.n + other.n, tuple(rows))

    def relabeled(self, order: list[int]) -> "Graph":
        """Graph with vertex order[i] renamed to i."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = [0] * self.n
        for i, v in enumerate(order):
            row = self.rows[v]
            acc = 0
            for w in _bits(row):
                acc |= 1 << pos[w]
            rows[i] = acc
        return Graph(self.n, tuple(rows))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- derived graphs -------------------------------------------------------


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced on the given vertex set, indices compacted in sorted order."""
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise UsageError("vertex out of range")
    pos = {v: i for i, v in enumerate(vs)}
    rows = [0] * len(vs)
    for v in vs:
        row = g.rows[v]
        acc = 0
        for w in vs:
            if row >> w & 1:
                acc |= 1 << pos[w]
        rows[pos[v]] = acc
    return Graph(len(vs), tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ r ^ (1 << v)) for v, r in enumerate(g.rows)))


# -- connectivity ---------------------------------------------------------


def _component_mask(rows, n: int, start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from start inside the allowed mask."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen

def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    return _component_mask(g.rows, g.n, 0, full) == full


def connected_components(g: Graph) -> list[list[int]]:
    full = (1 << g.n) - 1
    left = full
    comps = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = _component_mask(g.rows, g.n, start, full)
        comps.append(_bits(comp))
        left &= ~comp
    return comps


def is_two_connected(g: Graph) -> bool:
    """Connected, at least 3 vertices, and no articulation vertex (iterative DFS)."""
    n = g.n
    if n < 3 or not is_connected(g):
        return False
    rows = g.rows
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    timer = 0
    root_children = 0
    stack = [(0, iter(_bits(rows[0])))]
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                parent[w] = v
                disc[w] = low[w] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                stack.append((w, iter(_bits(rows[w]))))
                advanced = True
                break
            elif w != parent[v]:
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if not advanced:
            stack.pop()
            p = parent[v]
            if p != -1:
                if low[v] < low[p]:
                    low[p] = low[v]
                # non-root articulation test
                if p != 0 and low[v] >= disc[p]:
                    return False
    return root_children <= 1


# -- clique number --------------------------------------------------------


def clique_number(g: Graph) -> int:
    """Exact maximum clique size by branch and bound with a greedy coloring bound."""
    n = g.n
    if n > CANONICAL_CAP:
        raise CapabilityError(f"clique_number capped at order {CANONICAL_CAP}")
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda v: -g.rows[v].bit_count())
    pos = {v: i for i, v in enumerate(order)}
    rows = [0] * n
    for v in range(n):
        acc = 0
        for w in _bits(g.rows[v]):
            acc |= 1 << pos[w]
        rows[pos[v]] = acc
    best = 0

    def expand(size: int, cand: int):
        nonlocal best
        if cand == 0:
            if size > best:
                best = size
            return
        # greedy coloring of the candidate set; color index bounds clique growth
        colors = []  # list of (vertex, color)
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                colors.append((v, color))
                uncolored ^= low
                avail &= ~rows[v]
                avail &= uncolored
        for v, c in reversed(colors):
            if size + c <= best:
                return
            expand(size + 1, cand & rows[v])
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


# -- graph6 ---------------------------------------------------------------


def graph6_encode(g: Graph) -> str:
    """Standard graph6 line (no trailing newline)."""
    n = g.n
    if n > 258047:
        raise CapabilityError("graph6 encoder supports orders up to 258047")
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    chunks = []
    acc = 0
    nbits = 0
    for v in range(1, n):
        col = g.rows[v]
        for u in range(v):
            acc = (acc << 1) | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                chunks.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        chunks.append(chr(63 + (acc << (6 - nbits))))
    return head + "".join(chunks)


def graph6_decode(text: str) -> Graph:
    """Parse one graph6 line; malformed input raises Graph6Error with a byte offset."""
    s = text.rstrip("\n")
    offset = 0
    if s.startswith(">>graph6<<"):
        s = s[10:]
        offset = 10
    if not s:
        raise Graph6Error("empty graph6 string", offset)
    i = 0
    if s[i] == "~":
        if len(s) < 4:
            raise Graph6Error("truncated extended order field", offset + len(s))
        if s[1] == "~":
            raise Graph6Error("8-byte order fields not supported", offset + 1)
        n = 0
        for j in range(1, 4):
            c = ord(s[j]) - 63
            if not (0 <= c <= 63):
                raise Graph6Error(f"invalid order byte {s[j]!r}", offset + j)
            n = n << 6 | c
        i = 4
    else:
        n = ord(s[i]) - 63
        if not (0 <= n <= 62):
            raise Graph6Error(f"invalid order byte {s[i]!r}", offset + i)
        i = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[i:]
    if len(body) != need:
        raise Graph6Error(
            f"body has {len(body)} bytes, expected {need} for order {n}", offset + i + min(len(body), need)
        )
    rows = [0] * n
    bit = 0
    for j, ch in enumerate(body):
        c = ord(ch) - 63
        if not (0 <= c <= 63):
            raise Graph6Error(f"invalid body byte {ch!r}", offset + i + j)
        for k in range(5, -1, -1):
            if bit >= nbits:
                if c >> k & 1:
                    raise Graph6Error("nonzero padding bits", offset + i + j)
                continue
            if c >> k & 1:
                u, v = _edge_for_bit(bit)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph(n, tuple(rows))


def _edge_for_bit(bit: int) -> tuple[int, int]:
    # bit index in column-major upper-triangle order: (0,1), (0,2), (1,2), (0,3), ...
    v = 1
    while v * (v - 1) // 2 + v <= bit:
        v += 1
    return bit - v * (v - 1) // 2, v


# -- DOT ------------------------------------------------------------------


def dot_encode(g: Graph, roles: dict[int, str] | None = None, name: str = "G") -> str:
    """Undirected DOT text, one edge per line, roles shown as node comments."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if roles and v in roles:
            lines.append(f"  {v};  // role={roles[v]}")
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- canonical form -------------------------------------------------------
#
# Canonicalization runs in two layers.  Twin vertices (identical open or
# closed neighborhoods) can never be separated by color refinement, and big
# twin classes (cliques, independent join-sets) are exactly what makes naive
# individualization blow up -- so the graph is first collapsed, repeatedly, to
# its twin quotient.  The small quotient is then canonicalized by orthodox
# individualization-refinement with automorphism pruning, and the ordering is
# expanded back through the collapse levels.


def _twin_partition(rows, n: int, tags) -> list[list[int]]:
    closed: dict[tuple, list[int]] = {}
    for v in range(n):
        closed.setdefault((tags[v], rows[v] | (1 << v)), []).append(v)
    classes = []
    leftovers = []
    for members in closed.values():
        if len(members) > 1:
            classes.append(members)
        else:
            leftovers.append(members[0])
    open_: dict[tuple, list[int]] = {}
    for v in leftovers:
        open_.setdefault((tags[v], rows[v]), []).append(v)
    classes.extend(open_.values())
    for c in classes:
        c.sort()
    classes.sort(key=lambda c: c[0])
    return classes


def _refine(rows, n: int, colors: list[int]) -> list[int]:
    while True:
        masks: dict[int, int] = {}
        for v in range(n):
            masks[colors[v]] = masks.get(colors[v], 0) | (1 << v)
        class_masks = [masks[c] for c in sorted(masks)]
        sigs = []
        for v in range(n):
            row = rows[v]
            sigs.append((colors[v], tuple((row & m).bit_count() for m in class_masks)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _individualize(colors: list[int], v: int) -> list[int]:
    sigs = [(c, 1 if i == v else 0) for i, c in enumerate(colors)]
    rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [rank[s] for s in sigs]


def _cells(colors: list[int]) -> list[list[int]]:
    by: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by.setdefault(c, []).append(v)
    return [by[c] for c in sorted(by)]


def _code_for_order(rows, n: int, order: list[int]) -> bytes:
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = bytearray()
    acc = 0
    nbits = 0
    for i in range(1, n):
        col = rows[order[i]]
        for j in range(i):
            acc = (acc << 1) | (col >> order[j] & 1)
            nbits += 1
            if nbits == 8:
                out.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(acc << (8 - nbits))
    return bytes(out)


def _canon_search(rows, n: int, tags) -> list[int]:
    """Individualization-refinement search; returns the canonical vertex order."""
    best_code: bytes | None = None
    best_order: list[int] | None = None
    gens: list[tuple[int, ...]] = []

    def at_leaf(colors):
        nonlocal best_code, best_order
        order = [0] * n
        for v, c in enumerate(colors):
            order[c] = v
        code = _code_for_order(rows, n, order)
        if best_code is None or code < best_code:
            best_code = code
            best_order = order
        elif code == best_code and best_order is not None:
            posl = [0] * n
            for i, v in enumerate(order):
                posl[v] = i
            g = tuple(best_order[posl[v]] for v in range(n))
            if any(g[v] != v for v in range(n)) and g not in gens and len(gens) < 64:
                gens.append(g)

    def rec(colors, fixed):
        colors = _refine(rows, n, colors)
        target = None
        for cell in _cells(colors):
            if len(cell) > 1:
                target = cell
                break
        if target is None:
            at_leaf(colors)
            return
        tried = []
        for v in target:
            pruned = False
            for g in gens:
                if g[v] in tried and all(g[x] == x for x in fixed):
                    pruned = True
                    break
            if pruned:
                continue
            tried.append(v)
            rec(_individualize(colors, v), fixed + [v])

    rank = {t: i for i, t in enumerate(sorted(set(tags)))}
    rec([rank[t] for t in tags], [])
    assert best_order is not None
    return best_order


def _canon_order(rows, n: int, tags) -> list[int]:
    if n <= 1:
        return list(range(n))
    classes = _twin_partition(rows, n, tags)
    if all(len(c) == 1 for c in classes):
        return _canon_search(rows, n, tags)
    # collapse to the twin quotient, canonicalize it, expand back
    q = len(classes)
    idx_of = {}
    for i, members in enumerate(classes):
        for v in members:
            idx_of[v] = i
    q_rows = [0] * q
    raw_tags = []
    for i, members in enumerate(classes):
        rep = members[0]
        acc = 0
        for w in _bits(rows[rep]):
            j = idx_of[w]
            if j != i:
                acc |= 1 << j
        q_rows[i] = acc
        is_clique = len(members) > 1 and bool(rows[rep] >> members[1] & 1)
        raw_tags.append((1 if is_clique else 0, len(members), tags[members[0]]))
    rank = {t: i for i, t in enumerate(sorted(set(raw_tags)))}
    q_order = _canon_order(q_rows, q, [rank[t] for t in raw_tags])
    out: list[int] = []
    for qi in q_order:
        out.extend(classes[qi])
    return out


def canonical_order(g: Graph) -> list[int]:
    """A canonical vertex ordering: isomorphic graphs map to equal relabeled graphs."""
    if g.n > CANONICAL_CAP:
        raise CapabilityError(f"canonical form capped at order {CANONICAL_CAP}")
    return _canon_order(g.rows, g.n, [0] * g.n)


def canonical_code(g: Graph) -> str:
    """Total-order key: graph6 of the canonically relabeled graph."""
    return graph6_encode(g.relabeled(canonical_order(g)))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    if sorted(r.bit_count() for r in a.rows) != sorted(r.bit_count() for r in b.rows):
        return False
    return canonical_code(a) == canonical_code(b)
