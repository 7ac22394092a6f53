import pytest

from sgdrums.drum import (cover_image, drum, half_drum_map, opposite, opposite_swap, quotient_map,
                          reduced_drum, reduced_drum_direct, representative, sg_cover_map,
                          sg_isomorphism, sg_label_map)
from sgdrums.graph import InvalidParameter, is_double_cover, verify_isomorphism
from sgdrums.schrijver import complement_cycle_edges, schrijver

SIZES = [(h, n) for h in range(2, 8) for n in range(4, 15, 2)]


def to_nx(G):
    import networkx as nx
    H = nx.Graph(G.edges())
    H.add_nodes_from(range(len(G)))
    return H


@pytest.mark.parametrize("h,n", SIZES)
def test_drum_counts(h, n):
    D = drum(h, n)
    assert len(D) == h * n
    layer_edges = n * (n // 2) // 2  # K_{n/2,n/2} per completed layer
    assert D.num_edges() == (h - 2) * n + 2 * layer_edges + (h - 1) * n


@pytest.mark.parametrize("h,n", SIZES)
def test_opposite_is_fixed_point_free_automorphism(h, n):
    for v in drum(h, n).labels:
        assert opposite(opposite(v, h, n), h, n) == v
        assert opposite(v, h, n) != v
        assert representative(v, h, n) == representative(opposite(v, h, n), h, n)
    assert verify_isomorphism(opposite_swap(h, n))


@pytest.mark.parametrize("h,n", SIZES)
def test_reduced_drum_half_construction(h, n):
    R = reduced_drum(h, n)
    assert len(R) == h * n // 2
    assert reduced_drum_direct(h, n).same_as(R)
    assert verify_isomorphism(half_drum_map(h, n))


@pytest.mark.parametrize("h,n", [(h, n) for h, n in SIZES if h >= 3 and n >= 6])
def test_quotient_is_double_cover(h, n):
    assert is_double_cover(quotient_map(h, n))


@pytest.mark.parametrize("n", [6, 10, 14])
def test_two_layer_quotient_merges_parallel_edges(n):
    # (1,j) sees both (2,j) and its opposite (1,j+n/2), so the quotient loses degree
    assert not is_double_cover(quotient_map(2, n))


def test_bad_drum_parameters():
    for h, n in [(1, 6), (3, 5), (3, 2)]:
        with pytest.raises(InvalidParameter):
            drum(h, n)


def test_cover_image_example():
    # n = 6: (i, j) = (2, 1) gives cycle edges e_2 and e_5, avoided exactly by {1, 4}
    assert cover_image(2, 1, 2) == (1, 4)
    assert complement_cycle_edges((1, 4), 6) == frozenset({2, 5})


@pytest.mark.parametrize("k", range(1, 9))
def test_structure_isomorphism(k):
    assert verify_isomorphism(sg_isomorphism(k))


@pytest.mark.parametrize("k", range(2, 9))
def test_structure_double_cover_with_opposite_fibers(k):
    m = sg_cover_map(k)
    assert is_double_cover(m)
    D = m.domain
    for a, b in m.fibers():
        assert D.labels[b] == opposite(D.labels[a], k + 1, 2 * k + 2)


@pytest.mark.parametrize("k", range(1, 5))
def test_structure_isomorphism_independently(k):
    nx = pytest.importorskip("networkx")
    assert nx.is_isomorphic(to_nx(reduced_drum(k + 1, 2 * k + 2)), to_nx(schrijver(2 * k + 2, k)))


def test_label_map_is_bijective():
    m = sg_label_map(4)
    assert len(set(m.values())) == len(m) == len(schrijver(10, 4))
