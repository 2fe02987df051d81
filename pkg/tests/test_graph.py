"""Tests for graph construction, operations, encodings, and predicates."""

import itertools
import random

import pytest

import oracles
from matchinv import (
    Graph,
    are_isomorphic,
    complement,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    delete_vertex,
    disjoint_union,
    from_edge_list,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    is_chordal,
    is_connected,
    is_independent_set,
    path_graph,
    s_suspension,
    standard_graph,
    star_graph,
    to_dot,
)


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield from_edge_list(n, [pairs[i] for i in range(len(pairs))
                                 if mask >> i & 1])


def cycle_graph(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def test_from_edge_list_basic():
    G = from_edge_list(4, [(0, 1), (2, 1), (1, 2)])
    assert G.n == 4
    assert G.edges() == [(0, 1), (1, 2)]
    assert G.edge_count == 2
    assert G.has_edge(1, 0)
    assert not G.has_edge(0, 2)
    assert G.degree(1) == 2
    assert G.degree(3) == 0
    assert G.neighbor_mask(1) == 0b101


def test_from_edge_list_errors():
    with pytest.raises(ValueError):
        from_edge_list(3, [(0, 0)])
    with pytest.raises(ValueError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edge_list(2, [(-1, 0)])
    with pytest.raises(ValueError):
        from_edge_list(-1, [])
    with pytest.raises(ValueError):
        from_edge_list(65, [])


def test_graph_validation():
    # adjacency must be symmetric and loop-free
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b01), labels=("a",))


def test_standard_constructors():
    K4 = complete_graph(4)
    assert K4.edge_count == 6
    assert all(K4.degree(v) == 3 for v in range(4))

    P4 = path_graph(4)
    assert P4.edges() == [(0, 1), (1, 2), (2, 3)]

    S = star_graph(3)
    assert S.n == 4
    assert S.degree(0) == 3
    assert all(S.degree(v) == 1 for v in range(1, 4))

    B = complete_bipartite_graph(2, 3)
    assert B.n == 5
    assert B.edge_count == 6
    assert is_independent_set(B, {0, 1})
    assert is_independent_set(B, {2, 3, 4})
    assert not is_independent_set(B, {0, 2})

    assert path_graph(1).edge_count == 0
    with pytest.raises(ValueError):
        complete_graph(0)
    with pytest.raises(ValueError):
        star_graph(0)
    with pytest.raises(ValueError):
        complete_bipartite_graph(0, 2)


def test_standard_graph_dispatch():
    assert standard_graph("complete", 4).adj == complete_graph(4).adj
    assert standard_graph("path", 5).adj == path_graph(5).adj
    assert standard_graph("star", 3).adj == star_graph(3).adj
    assert standard_graph("complete_bipartite", 2, 2).adj == \
        complete_bipartite_graph(2, 2).adj
    with pytest.raises(ValueError):
        standard_graph("petersen", 10)
    with pytest.raises(ValueError):
        standard_graph("complete", 3, 4)


def test_induced_subgraph():
    K4 = complete_graph(4)
    H = induced_subgraph(K4, [0, 2, 3])
    assert H.n == 3
    assert H.edge_count == 3

    P4 = path_graph(4)
    H = induced_subgraph(P4, {0, 1, 3})
    assert H.edges() == [(0, 1)]

    G = from_edge_list(3, [(0, 1)], labels=("a", "b", "c"))
    H = induced_subgraph(G, [1, 2])
    assert H.labels == ("b", "c")
    assert H.edge_count == 0

    with pytest.raises(ValueError):
        induced_subgraph(P4, [0, 4])


def test_delete_vertex():
    P4 = path_graph(4)
    assert delete_vertex(P4, 0).edges() == [(0, 1), (1, 2)]
    assert delete_vertex(P4, 1).edges() == [(1, 2)]
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 7)
        G = oracles.random_graph(rng, n)
        v = rng.randrange(n)
        H = delete_vertex(G, v)
        expect = [(a - (a > v), b - (b > v)) for a, b in G.edges()
                  if v not in (a, b)]
        assert list(H.edges()) == sorted(expect)


def test_disjoint_union():
    A = path_graph(2)
    B = path_graph(3)
    U = disjoint_union(A, B)
    assert U.n == 5
    assert U.edges() == [(0, 1), (2, 3), (3, 4)]
    assert not is_connected(U)
    G = from_edge_list(1, [], labels=("p",))
    H = from_edge_list(1, [], labels=("q",))
    assert disjoint_union(G, H).labels == ("p", "q")


def test_s_suspension():
    P4 = path_graph(4)
    H = s_suspension(P4, {0, 3})
    assert H.n == 5
    assert H.neighbor_mask(4) == 0b00110
    assert H.labels is None
    L = from_edge_list(2, [(0, 1)], labels=("a", "b"))
    assert s_suspension(L, set()).labels == ("a", "b", "w")

    two_k2 = from_edge_list(4, [(0, 1), (2, 3)])
    H = s_suspension(two_k2, [1, 3])
    assert H.neighbor_mask(4) == 0b00101

    # S must be independent
    with pytest.raises(ValueError):
        s_suspension(P4, {0, 1})
    # empty S gives a dominating apex
    H = s_suspension(P4, set())
    assert H.degree(4) == 4


def test_connectivity():
    assert is_connected(path_graph(4))
    assert not is_connected(from_edge_list(4, [(0, 1), (2, 3)]))
    assert is_connected(complete_graph(1))
    assert is_connected(from_edge_list(0, []))
    assert not is_connected(from_edge_list(2, []))
    for G in all_graphs(4):
        assert is_connected(G) == oracles.connected(G)


def test_connected_components():
    G = from_edge_list(6, [(0, 2), (2, 4), (1, 5)])
    comps = connected_components(G)
    assert comps == [0b010101, 0b100010, 0b001000]
    assert connected_components(from_edge_list(0, [])) == []
    assert connected_components(complete_graph(3)) == [0b111]


def test_complement():
    K4 = complete_graph(4)
    assert complement(K4).edge_count == 0
    P4 = path_graph(4)
    assert complement(complement(P4)).adj == P4.adj
    two_k3 = disjoint_union(complete_graph(3), complete_graph(3))
    assert are_isomorphic(complement(two_k3), complete_bipartite_graph(3, 3))


def test_chordal_examples():
    assert is_chordal(complete_graph(5))
    assert is_chordal(path_graph(6))
    assert is_chordal(star_graph(4))
    assert is_chordal(from_edge_list(0, []))
    assert not is_chordal(cycle_graph(4))
    assert not is_chordal(cycle_graph(5))
    assert not is_chordal(complete_bipartite_graph(2, 3))
    # C4 plus one chord is chordal
    assert is_chordal(from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3),
                                         (0, 2)]))


def test_chordal_exhaustive_small():
    for n in range(6):
        for G in all_graphs(n):
            assert is_chordal(G) == oracles.chordal(G)


def test_chordal_random():
    rng = random.Random(11)
    for _ in range(120):
        n = rng.randint(6, 7)
        G = oracles.random_graph(rng, n)
        assert is_chordal(G) == oracles.chordal(G)


def test_isomorphism_examples():
    assert are_isomorphic(path_graph(4), from_edge_list(4, [(2, 0), (0, 3),
                                                            (3, 1)]))
    assert not are_isomorphic(path_graph(4), star_graph(3))
    assert not are_isomorphic(path_graph(4), path_graph(5))
    assert are_isomorphic(from_edge_list(0, []), from_edge_list(0, []))


def test_isomorphism_random():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(2, 6)
        G = oracles.random_graph(rng, n)
        H = oracles.random_graph(rng, n)
        assert are_isomorphic(G, H) == oracles.isomorphic(G, H)
    # relabelings are always recognized
    for _ in range(40):
        n = rng.randint(2, 7)
        G = oracles.random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        H = from_edge_list(n, [(perm[u], perm[v]) for u, v in G.edges()])
        assert are_isomorphic(G, H)


def test_graph6_known_strings():
    assert graph6_encode(path_graph(2)) == "A_"
    assert graph6_encode(complete_graph(1)) == "@"
    assert graph6_encode(from_edge_list(0, [])) == "?"
    assert graph6_decode("A_").edges() == [(0, 1)]
    assert graph6_decode("@").n == 1
    assert graph6_decode("?").n == 0
    assert graph6_decode("DQc").n == 5


def test_graph6_round_trip_exhaustive():
    for n in range(6):
        for G in all_graphs(n):
            H = graph6_decode(graph6_encode(G))
            assert H.n == G.n and H.adj == G.adj


def test_graph6_round_trip_random():
    rng = random.Random(17)
    for _ in range(80):
        n = rng.randint(6, 12)
        G = oracles.random_graph(rng, n)
        H = graph6_decode(graph6_encode(G))
        assert H.adj == G.adj


def test_graph6_long_header():
    # 63 and 64 vertices need the extended length header
    for n in (63, 64):
        rng = random.Random(n)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.1]
        G = from_edge_list(n, edges)
        s = graph6_encode(G)
        assert s.startswith("~")
        H = graph6_decode(s)
        assert H.n == n and H.adj == G.adj


def test_graph6_malformed():
    with pytest.raises(ValueError):
        graph6_decode("")
    with pytest.raises(ValueError):
        graph6_decode("A")          # truncated body
    with pytest.raises(ValueError):
        graph6_decode("A_?")        # trailing junk
    with pytest.raises(ValueError):
        graph6_decode("A" + chr(30))  # char below printable range
    with pytest.raises(ValueError):
        graph6_decode("~")          # truncated extended header
    with pytest.raises(ValueError):
        graph6_decode("AB")         # nonzero padding bits for n=2
    with pytest.raises(ValueError):
        graph6_decode("~~?@?")      # width beyond the supported cap


def test_to_dot():
    G = from_edge_list(3, [(0, 1)], labels=("a", "b", "c"))
    text = to_dot(G)
    assert "graph" in text
    assert "0 -- 1" in text
    assert '"a"' in text
    assert text.strip().endswith("}")
