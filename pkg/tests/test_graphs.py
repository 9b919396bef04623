"""Graph core: bitset adjacency, codecs, canonical labels, connectivity."""

import pytest

from turanpaths.errors import Graph6Error, UsageError
from turanpaths.graphs import (
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
from turanpaths.rng import Rng


def _random_graph(rng: Rng, n: int) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.randrange(2)]
    return Graph.from_edges(n, edges)


def _path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_edge_basics():
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    assert g.n == 4
    assert g.edge_count() == 2
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.degree(1) == 2 and g.degree(3) == 0
    assert g.min_degree() == 0
    assert g.neighbors(1) == [0, 2]
    assert sorted(g.edges()) == [(0, 1), (1, 2)]


def test_with_and_without_edge_are_pure():
    g = Graph.from_edges(3, [(0, 1)])
    g2 = g.with_edge(1, 2)
    g3 = g2.without_edge(0, 1)
    assert g.edge_count() == 1
    assert g2.edge_count() == 2
    assert g3.edge_count() == 1 and g3.has_edge(1, 2) and not g3.has_edge(0, 1)


def test_complete_and_empty():
    assert Graph.complete(5).edge_count() == 10
    assert Graph.empty(4).edge_count() == 0
    assert Graph.complete(1).edge_count() == 0


def test_disjoint_union_and_relabel():
    g = Graph.complete(3).disjoint_union(Graph.complete(2))
    assert g.n == 5 and g.edge_count() == 4
    h = g.relabeled([4, 3, 2, 1, 0])
    assert h.edge_count() == 4
    assert h.has_edge(4, 3) and h.has_edge(1, 0)


def test_graph6_known_strings():
    g = graph6_decode("H~~~~~~")
    assert g.n == 9 and g.edge_count() == 36  # K_9
    g = graph6_decode("ETmw")
    assert g.n == 6 and g.edge_count() == 10
    assert graph6_encode(Graph.complete(9)) == "H~~~~~~"


def test_graph6_roundtrip_fuzz():
    rng = Rng(3)
    for _ in range(1000):
        n = rng.randrange(0, 13)
        g = _random_graph(rng, n)
        assert graph6_decode(graph6_encode(g)) == g


def test_graph6_rejects_garbage():
    with pytest.raises(Graph6Error):
        graph6_decode("")
    with pytest.raises(Graph6Error):
        graph6_decode("ETm\x19")
    with pytest.raises(Graph6Error):
        graph6_decode("ETmwww")  # trailing bytes


def test_connectivity():
    assert is_connected(_path(5))
    assert not is_connected(Graph.complete(3).disjoint_union(Graph.complete(2)))
    assert is_connected(Graph.complete(1))
    assert is_connected(Graph.empty(0))
    assert not is_connected(Graph.empty(2))


def test_two_connectivity():
    assert is_two_connected(_cycle(5))
    assert not is_two_connected(_path(5))
    assert is_two_connected(Graph.complete(3))
    assert not is_two_connected(Graph.complete(2))
    assert not is_two_connected(Graph.complete(1))
    # cut vertex: two triangles sharing vertex 0
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    assert is_connected(g) and not is_two_connected(g)


def test_connected_components():
    g = Graph.complete(3).disjoint_union(Graph.complete(2)).disjoint_union(Graph.empty(1))
    comps = connected_components(g)
    assert sorted(map(len, comps)) == [1, 2, 3]
    assert sorted(v for c in comps for v in c) == list(range(6))


def test_clique_number():
    assert clique_number(Graph.complete(4)) == 4
    assert clique_number(_cycle(5)) == 2
    assert clique_number(_cycle(3)) == 3
    assert clique_number(Graph.empty(4)) == 1
    assert clique_number(Graph.empty(0)) == 0
    # K_4 minus an edge
    assert clique_number(Graph.complete(4).without_edge(0, 1)) == 3


def test_induced_subgraph():
    h = induced_subgraph(Graph.complete(4), [0, 1, 2])
    assert h.n == 3 and h.edge_count() == 3
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    h = induced_subgraph(g, [0, 2, 4])
    assert h.edge_count() == 0


def test_complement():
    g = complement(_cycle(5))
    assert g.edge_count() == 5
    assert is_isomorphic(g, _cycle(5))  # C_5 is self-complementary
    assert complement(Graph.complete(4)).edge_count() == 0


def test_canonical_code_permutation_invariance():
    rng = Rng(11)
    for _ in range(25):
        n = rng.randrange(2, 10)
        g = _random_graph(rng, n)
        code = canonical_code(g)
        for _ in range(60):
            order = list(range(n))
            rng.shuffle(order)
            assert canonical_code(g.relabeled(order)) == code


def test_canonical_code_separates_nonisomorphic():
    assert canonical_code(_path(5)) != canonical_code(_cycle(5))
    assert canonical_code(Graph.complete(4)) != canonical_code(Graph.complete(4).without_edge(0, 1))


def test_canonical_order_is_a_permutation():
    g = _random_graph(Rng(5), 8)
    order = canonical_order(g)
    assert sorted(order) == list(range(8))


def test_is_isomorphic():
    rng = Rng(19)
    g = _random_graph(rng, 7)
    order = list(range(7))
    rng.shuffle(order)
    assert is_isomorphic(g, g.relabeled(order))
    assert not is_isomorphic(_path(5), _cycle(5))
    assert not is_isomorphic(_path(4), _path(5))


def test_dot_output_shape():
    text = dot_encode(Graph.from_edges(3, [(0, 1), (1, 2)]), roles={0: "A", 1: "B", 2: "A"})
    assert text.startswith("graph")
    assert "0 -- 1;" in text and "1 -- 2;" in text
    assert "role=A" in text and "role=B" in text
