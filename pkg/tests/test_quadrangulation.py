import pytest

from sgdrums.drum import reduced_drum, sg_label_map
from sgdrums.graph import InvalidParameter, cycle, is_spanning_subgraph, is_subgraph
from sgdrums.quadrangulation import (InvalidEmbedding, SignedEmbedding, delete_edges, ell,
                                     embed_q, embed_x, embed_y, embed_z, embedding_from_faces,
                                     euler_characteristic, extra_edges, face_census, is_orientable,
                                     is_quadrangulation, mobius_ladder, q_graph, trace_faces,
                                     trivial_embedding, u_graph, x_graph, y_graph, z_graph)
from sgdrums.schrijver import schrijver
from sgdrums.solver import chromatic_number


def to_nx(G):
    import networkx as nx
    H = nx.Graph(G.edges())
    H.add_nodes_from(range(len(G)))
    return H


def test_mobius_and_ell():
    nx = pytest.importorskip("networkx")
    assert nx.is_isomorphic(to_nx(mobius_ladder(4)), nx.complete_graph(4))
    L4 = ell(4)
    assert (len(L4), L4.num_edges()) == (10, 15)
    assert L4.same_as(mobius_ladder(10))
    L3 = ell(3)
    assert extra_edges(3) == [(1, 4), (2, 5), (3, 6), (4, 7)]
    assert L3.num_edges() == 12
    for k in range(1, 9):
        assert ell(k).is_bipartite()


def test_u_graph():
    assert u_graph(3).same_as(y_graph(3))
    U4 = u_graph(4)
    assert all(U4.degree(U4.index((2, j))) == 3 for j in range(1, 11))
    U5 = u_graph(5)
    assert U5.has_label_edge((2, 1), (2, 7))
    with pytest.raises(InvalidParameter):
        u_graph(2)


@pytest.mark.parametrize("h,n", [(h, n) for h in range(2, 6) for n in range(6, 15, 2)])
def test_x_graph(h, n):
    X = x_graph(h, n)
    assert len(X) == (h - 1) * n + n // 2
    assert set(X.degrees()) == {4}
    if (n // 2) % 2:
        assert is_subgraph(X, reduced_drum(2 * h - 1, n))


def test_x_graph_is_y_for_even_k():
    for k in (2, 4, 6):
        assert x_graph(k // 2 + 1, 2 * k + 2).same_as(y_graph(k))


@pytest.mark.parametrize("h,n", [(h, n) for h in range(2, 5) for n in range(4, 11, 2)])
def test_x_graph_is_4_chromatic(h, n):
    assert chromatic_number(x_graph(h, n)) == 4


def test_y_and_z_sizes():
    Y3 = y_graph(3)
    assert (len(Y3), Y3.num_edges()) == (16, 32)
    assert schrijver(8, 3).num_edges() - Y3.num_edges() == 4
    for k in range(2, 7):
        assert z_graph(k).num_edges() == 2 * (k + 1) ** 2 - 2
        assert y_graph(k).num_edges() == 2 * (k + 1) ** 2


@pytest.mark.parametrize("k", range(2, 7))
def test_spanning_subgraphs_of_schrijver(k):
    SG = schrijver(2 * k + 2, k)
    m = sg_label_map(k)
    assert is_spanning_subgraph(y_graph(k), SG, m.__getitem__)
    assert is_spanning_subgraph(z_graph(k), SG, m.__getitem__)


def test_y2_is_all_of_sg62():
    assert y_graph(2).num_edges() == schrijver(6, 2).num_edges()


def test_z_inside_y_only_for_k2():
    assert is_subgraph(z_graph(2), y_graph(2))
    assert not is_subgraph(z_graph(3), y_graph(3))


@pytest.mark.parametrize("k", range(2, 7))
def test_z_boundary_ladder_is_bipartite(k):
    nx = pytest.importorskip("networkx")
    Z = z_graph(k)
    bottom = Z.induced_subgraph([i for i, v in enumerate(Z.labels) if v[0] == 1])
    assert bottom.is_bipartite()
    ladder = nx.cartesian_product(nx.path_graph(k + 1), nx.path_graph(2))
    assert nx.is_isomorphic(to_nx(bottom), ladder)


@pytest.mark.parametrize("k", range(2, 5))
def test_z_chromatic_number(k):
    assert chromatic_number(z_graph(k)) == 4


@pytest.mark.parametrize("k", range(2, 6))
def test_y_chromatic_number(k):
    assert chromatic_number(y_graph(k)) == 4


def test_q_graph():
    Q = q_graph()
    assert (len(Q), Q.num_edges()) == (16, 30)
    assert chromatic_number(Q) == 4


# -- embeddings -------------------------------------------------------------------

def test_trivial_cycle_embedding():
    emb = trivial_embedding(cycle(4))
    assert face_census(emb) == {"V": 4, "E": 4, "F": 2, "euler_characteristic": 2,
                                "orientable": True, "face_lengths": {4: 2}}


def test_two_squares_glued_make_a_sphere():
    C = cycle(4)
    sphere = embedding_from_faces(C, [[1, 2, 3, 4], [1, 2, 3, 4]])
    assert euler_characteristic(sphere) == 2 and is_orientable(sphere)


@pytest.mark.parametrize("k", range(2, 7))
def test_embed_y(k):
    emb = embed_y(k)
    c = face_census(emb)
    assert c["euler_characteristic"] == 0 and not c["orientable"]
    assert is_quadrangulation(emb)
    assert (c["V"], c["E"], c["F"]) == ((k + 1) ** 2, 2 * (k + 1) ** 2, (k + 1) ** 2)


@pytest.mark.parametrize("k", range(2, 7))
def test_embed_z(k):
    emb = embed_z(k)
    c = face_census(emb)
    assert c["euler_characteristic"] == 1 and not c["orientable"]
    assert is_quadrangulation(emb)
    assert c["E"] == 2 * (c["V"] - 1)


def test_embed_small_examples():
    assert {k: v for k, v in face_census(embed_z(2)).items()} == {
        "V": 9, "E": 16, "F": 8, "euler_characteristic": 1, "orientable": False, "face_lengths": {4: 8}}
    c = face_census(embed_y(2))
    assert (c["V"], c["E"], c["F"], c["euler_characteristic"]) == (9, 18, 9, 0)
    c = face_census(embed_y(3))
    assert (c["V"], c["E"], c["F"], c["euler_characteristic"]) == (16, 32, 16, 0)


@pytest.mark.parametrize("h,n", [(h, n) for h in range(2, 5) for n in range(6, 13, 2)])
def test_embed_x(h, n):
    emb = embed_x(h, n)
    assert is_quadrangulation(emb) and euler_characteristic(emb) == 0 and not is_orientable(emb)


def test_embed_x_needs_n_at_least_6():
    with pytest.raises(InvalidParameter):
        embed_x(3, 4)


def test_traced_faces_reproduce_drawing():
    # each traced face has 4 distinct vertices and every edge is on two face sides
    emb = embed_y(4)
    faces = trace_faces(emb)
    sides = {}
    for f in faces:
        assert len(set(f)) == 4
        for i in range(4):
            key = frozenset((f[i], f[(i + 1) % 4]))
            sides[key] = sides.get(key, 0) + 1
    assert set(sides.values()) == {2} and len(sides) == len(emb.edges)


def test_embed_q_merges_faces():
    c = face_census(embed_q())
    assert (c["V"], c["E"], c["F"], c["euler_characteristic"]) == (16, 30, 14, 0)
    assert c["face_lengths"] == {4: 13, 8: 1}


def test_delete_edges_keeps_valid_rotation_system():
    emb = delete_edges(embed_y(4), [((1, 1), (1, 6))])
    assert euler_characteristic(emb) == 0
    assert sum(len(f) for f in trace_faces(emb)) == 2 * len(emb.edges)


def test_invalid_face_sets():
    C = cycle(4)
    with pytest.raises(InvalidEmbedding):
        embedding_from_faces(C, [[1, 2, 3, 4]])
    with pytest.raises(InvalidEmbedding):
        embedding_from_faces(C, [[1, 3, 2, 4], [1, 2, 3, 4]])


def test_signed_embedding_validation():
    emb = trivial_embedding(cycle(4))
    with pytest.raises(InvalidEmbedding):
        SignedEmbedding(emb.graph, emb.edges, emb.rotations, (1, 1, 1, 2))
    with pytest.raises(InvalidEmbedding):
        SignedEmbedding(emb.graph, emb.edges, ((0,), (0, 1), (1, 2), (2, 3)), emb.signs)


def test_flipping_signs_at_a_vertex_keeps_surface():
    emb = embed_z(3)
    v = 5
    flipped = tuple(-s if v in emb.edges[e] else s for e, s in enumerate(emb.signs))
    rot = list(emb.rotations)
    rot[v] = tuple(reversed(rot[v]))
    other = SignedEmbedding(emb.graph, emb.edges, tuple(rot), flipped)
    assert face_census(other) == face_census(emb)


def test_embedding_json():
    d = embed_y(2).to_json_dict()
    assert set(d) >= {"rotations", "signs"}
    assert len(d["signs"]) == 18 and all(s in (1, -1) for s in d["signs"].values())


def test_criticality_of_y():
    from sgdrums.criticality import critical_edges
    Y3 = y_graph(3)
    non = [e for e, b in zip(Y3.label_edges(), critical_edges(Y3)) if not b]
    assert non == [((1, 2), (1, 5)), ((1, 3), (1, 6))]
    Y4 = y_graph(4)
    assert all(critical_edges(Y4))
