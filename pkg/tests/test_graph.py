import json

import pytest
from hypothesis import given, strategies as st

from sgdrums.graph import (ContractViolation, Graph, InvalidParameter, LoopError, VertexMap,
                           cartesian_product, complete, complete_bipartite, cycle, graph_from_json,
                           identify_vertices, identity_map, is_cover, is_double_cover, is_homomorphism,
                           is_spanning_subgraph, is_subgraph, path, verify_isomorphism)

from conftest import random_graph


def test_from_edges_collapses_duplicates():
    G = Graph.from_edges("abc", [("a", "b"), ("b", "a"), ("b", "c")])
    assert G.num_edges() == 2
    assert G.has_label_edge("a", "b") and not G.has_label_edge("a", "c")


def test_loop_rejected():
    with pytest.raises(LoopError):
        Graph.from_edges("ab", [("a", "a")])


def test_duplicate_label_rejected():
    with pytest.raises(ContractViolation):
        Graph.from_edges(["a", "a"], [])


def test_elementary_counts():
    assert (len(path(5)), path(5).num_edges()) == (5, 4)
    assert (len(cycle(7)), cycle(7).num_edges()) == (7, 7)
    assert complete(5).num_edges() == 10
    assert complete_bipartite(3, 4).num_edges() == 12
    assert complete_bipartite(3, 3).is_bipartite()
    assert not cycle(5).is_bipartite()


def test_cartesian_product_counts():
    P = cartesian_product(path(3), cycle(6))
    assert len(P) == 18
    assert P.num_edges() == 3 * 6 + 2 * 6
    assert sorted(set(P.degrees())) == [3, 4]


def test_identify_vertices_merges_and_collapses():
    # identifying opposite vertices of C_6 gives K_3
    G = identify_vertices(cycle(6), [(0, 3), (1, 4), (2, 5)])
    assert len(G) == 3 and G.num_edges() == 3


def test_identify_adjacent_raises():
    with pytest.raises(LoopError):
        identify_vertices(cycle(4), [(0, 1)])


def test_identify_overlapping_pairs_raise():
    with pytest.raises(InvalidParameter):
        identify_vertices(cycle(6), [(0, 2), (2, 4)])


def test_quotient_of_c6_is_a_cover_of_k3():
    C6 = cycle(6)
    K3 = identify_vertices(C6, [(0, 3), (1, 4), (2, 5)])
    m = VertexMap(C6, K3, tuple(v % 3 for v in range(6)))
    assert is_homomorphism(m) and is_cover(m) and is_double_cover(m)
    assert not verify_isomorphism(m)


def test_isomorphism_checks():
    C = cycle(5)
    rot = VertexMap(C, C, tuple((v + 1) % 5 for v in range(5)))
    assert verify_isomorphism(rot)
    assert verify_isomorphism(identity_map(C))
    bad = VertexMap(C, C, tuple((2 * v) % 5 for v in range(5)))
    assert not verify_isomorphism(bad)


def test_cover_requires_homomorphism():
    C = cycle(4)
    with pytest.raises(ContractViolation):
        is_cover(VertexMap(C, C, (0, 0, 1, 1)))


def test_subgraph_checks():
    C = cycle(5)
    K = complete(5)
    assert is_spanning_subgraph(C, K)
    assert not is_spanning_subgraph(K, C)
    assert is_subgraph(path(3), C)


def test_json_and_dot():
    G = complete_bipartite(2, 2)
    d = json.loads(G.to_json())
    assert set(d) == {"family", "params", "vertices", "edges"}
    assert len(d["edges"]) == 4
    assert graph_from_json(d).same_as(G)
    dot = G.to_dot()
    assert dot.startswith("graph") and dot.count("--") == 4


@given(st.integers(1, 9), st.floats(0, 1), st.integers(0, 10**6))
def test_json_round_trip(n, p, seed):
    G = random_graph(n, p, seed)
    H = graph_from_json(json.loads(G.to_json()))
    assert H.same_as(G)
    assert H.edges() == G.edges()


@given(st.integers(2, 9), st.floats(0, 1), st.integers(0, 10**6))
def test_remove_edges_then_degrees(n, p, seed):
    G = random_graph(n, p, seed)
    edges = G.edges()
    H = G.remove_edges(edges[::2])
    assert H.num_edges() == len(edges) - len(edges[::2])
    assert sum(H.degrees()) == 2 * H.num_edges()
    assert is_spanning_subgraph(H, G)


@given(st.integers(2, 9), st.floats(0, 1), st.integers(0, 10**6))
def test_bipartition_is_proper(n, p, seed):
    G = random_graph(n, p, seed)
    side = G.bipartition()
    if side is not None:
        assert all(side[i] != side[j] for i, j in G.edges())


@given(st.integers(2, 9), st.floats(0, 1), st.integers(0, 10**6))
def test_bipartite_agrees_with_networkx(n, p, seed):
    nx = pytest.importorskip("networkx")
    G = random_graph(n, p, seed)
    H = nx.Graph(G.edges())
    H.add_nodes_from(range(n))
    assert G.is_bipartite() == nx.is_bipartite(H)
    assert G.is_connected() == nx.is_connected(H)
