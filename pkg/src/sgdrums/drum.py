"""Drums D_{h,n}, reduced drums D'_{h,n} and the structure map onto SG(2k+2, k).

Grid labels are (i, j) with layer i in [h] and cyclic position j in [n].
In a reduced drum, each merged opposite pair is labeled by its
representative in the lower half: smaller layer index, and for the
self-opposite middle layer of odd h the position j <= n/2.
"""
from __future__ import annotations

from .graph import Graph, InvalidParameter, VertexMap, identify_vertices
from .schrijver import complement_cycle_edges, schrijver, wrap


def _check(h: int, n: int):
    if h < 2 or n < 4 or n % 2:
        raise InvalidParameter(f"need h >= 2 and even n >= 4, got h={h}, n={n}")


def _cylinder_edges(h: int, n: int):
    for i in range(1, h + 1):
        for j in range(1, n + 1):
            yield (i, j), (i, wrap(j + 1, n))
            if i < h:
                yield (i, j), (i + 1, j)


def _bipartite_layer_edges(i: int, n: int):
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1, 2):
            yield (i, a), (i, b)


def drum(h: int, n: int) -> Graph:
    _check(h, n)
    labels = [(i, j) for i in range(1, h + 1) for j in range(1, n + 1)]
    edges = list(_cylinder_edges(h, n))
    edges += _bipartite_layer_edges(1, n)
    edges += _bipartite_layer_edges(h, n)
    return Graph.from_edges(labels, edges, "drum", {"h": h, "n": n})


def opposite(v: tuple[int, int], h: int, n: int) -> tuple[int, int]:
    i, j = v
    return h + 1 - i, wrap(j + n // 2, n)


def representative(v: tuple[int, int], h: int, n: int) -> tuple[int, int]:
    """Canonical name of the opposite pair containing v."""
    return min(v, opposite(v, h, n))


def opposite_swap(h: int, n: int) -> VertexMap:
    D = drum(h, n)
    return VertexMap.from_labels(D, D, lambda v: opposite(v, h, n))


def reduced_drum(h: int, n: int) -> Graph:
    """Quotient of drum(h, n) by the opposite pairing."""
    D = drum(h, n)
    pairs = []
    for v in D.labels:
        w = opposite(v, h, n)
        if v < w:
            pairs.append((D.index(v), D.index(w)))
    R = identify_vertices(D, pairs, merged_label=lambda a, b: min(a, b))
    return Graph(R.labels, R.adj, "reduced_drum", {"h": h, "n": n})


def quotient_map(h: int, n: int) -> VertexMap:
    """The projection iota from drum(h, n) to reduced_drum(h, n)."""
    return VertexMap.from_labels(drum(h, n), reduced_drum(h, n),
                                 lambda v: representative(v, h, n))


def reduced_drum_direct(h: int, n: int) -> Graph:
    """Reduced drum built from half the drum, without a quotient.

    Even h: P_{h/2} x C_n, bottom layer completed to K_{n/2,n/2}, top layer
    given antipodal chords.  Odd h: P_{(h+1)/2} x C_n with the completed
    bottom layer and the top layer folded antipodally onto C_{n/2}.
    """
    _check(h, n)
    top = (h + 1) // 2
    half = n // 2
    edges = list(_cylinder_edges(top, n))
    edges += _bipartite_layer_edges(1, n)
    if h % 2 == 0:
        edges += [((top, j), (top, j + half)) for j in range(1, half + 1)]
        labels = [(i, j) for i in range(1, top + 1) for j in range(1, n + 1)]
        return Graph.from_edges(labels, edges, "reduced_drum", {"h": h, "n": n})

    def fold(v):
        i, j = v
        return (i, wrap(j, half)) if i == top else v

    labels = [(i, j) for i in range(1, top) for j in range(1, n + 1)]
    labels += [(top, j) for j in range(1, half + 1)]
    return Graph.from_edges(labels, [(fold(a), fold(b)) for a, b in edges],
                            "reduced_drum", {"h": h, "n": n})


def half_drum_map(h: int, n: int) -> VertexMap:
    """The explicit isomorphism reduced_drum_direct -> reduced_drum (same labels)."""
    A, B = reduced_drum_direct(h, n), reduced_drum(h, n)
    return VertexMap.from_labels(A, B, lambda v: v)


# -- the structure theorem for 4-chromatic Schrijver graphs -----------------

def _edge_table(k: int):
    n = 2 * k + 2
    SG = schrijver(n, k)
    return SG, {complement_cycle_edges(v, n): v for v in SG.labels}


def cover_image(i: int, j: int, k: int, table=None):
    """The Schrijver vertex v with e(v) = {e_{i+j-1}, e_{j-i}}."""
    n = 2 * k + 2
    if table is None:
        table = _edge_table(k)[1]
    return table[frozenset((wrap(i + j - 1, n), wrap(j - i, n)))]


def sg_cover_map(k: int) -> VertexMap:
    """Double cover drum(k+1, 2k+2) -> schrijver(2k+2, k)."""
    if k < 2:
        raise InvalidParameter("the cover construction needs k >= 2")
    SG, table = _edge_table(k)
    D = drum(k + 1, 2 * k + 2)
    return VertexMap.from_labels(D, SG, lambda v: cover_image(v[0], v[1], k, table))


def sg_isomorphism(k: int) -> VertexMap:
    """Isomorphism reduced_drum(k+1, 2k+2) -> schrijver(2k+2, k)."""
    n = 2 * k + 2
    R = reduced_drum(k + 1, n)
    if k == 1:
        return VertexMap(R, schrijver(4, 1), tuple(range(4)))
    SG, table = _edge_table(k)
    return VertexMap.from_labels(R, SG, lambda v: cover_image(v[0], v[1], k, table))


def sg_label_map(k: int):
    """Label-level version of sg_isomorphism as a dict."""
    m = sg_isomorphism(k)
    return {m.domain.labels[v]: m.codomain.labels[w] for v, w in enumerate(m.images)}
