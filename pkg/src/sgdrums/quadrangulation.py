"""Graph families living on the Klein bottle and the projective plane, and
signed rotation systems for checking their embeddings.

Y_k, Z_k, Q and X_{h,n} are labeled in reduced-drum coordinates (the
half-drum picture: layer 1 is the bottom, the top layer is folded or
carries antipodal chords), so containment in SG(2k+2, k) can be checked
label by label through the structure isomorphism.

Embeddings are produced from a rectangular grid drawing: rows r and
columns c in [1, R] x [1, C], with horizontal edges leaving the right
side re-entering on the left at row R+1-r.  The top side is glued to
the bottom either straight (Klein bottle), with a one-step skew (Klein
bottle, odd k), or reversed (projective plane).  The drawing's faces are
turned into a signed rotation system, which is then checked by
independent face tracing.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .drum import reduced_drum_direct
from .graph import Graph, InvalidParameter, cartesian_product, cycle, path
from .schrijver import wrap


class InvalidEmbedding(ValueError):
    pass


# -- families --------------------------------------------------------------------

def mobius_ladder(n: int) -> Graph:
    if n < 4 or n % 2:
        raise InvalidParameter("Moebius ladder needs even n >= 4")
    edges = [(j, wrap(j + 1, n)) for j in range(1, n + 1)]
    edges += [(j, j + n // 2) for j in range(1, n // 2 + 1)]
    return Graph.from_edges(range(1, n + 1), edges, "mobius", {"n": n})


def extra_edges(k: int) -> list[tuple[int, int]]:
    """Chords added to C_{2k+2} to form L_k, as pairs (a, b) with a < b."""
    if k % 2 == 0:
        return [(i, i + k + 1) for i in range(1, k + 2)]
    return [(i, i + k) for i in range(1, k + 2)]


def ell(k: int) -> Graph:
    if k < 1:
        raise InvalidParameter("L_k needs k >= 1")
    n = 2 * k + 2
    edges = [(j, wrap(j + 1, n)) for j in range(1, n + 1)] + extra_edges(k)
    return Graph.from_edges(range(1, n + 1), edges, "L", {"k": k})


def u_graph(k: int) -> Graph:
    """Two layers over C_{2k+2}: L_k at the bottom, C or M_{2k+2} (odd k) on top."""
    if k < 3:
        raise InvalidParameter("U_k needs k >= 3")
    n = 2 * k + 2
    G = cartesian_product(path(2), cycle(n))
    edges = G.label_edges()
    edges += [((1, a), (1, b)) for a, b in extra_edges(k)]
    if k % 2:
        edges += [((2, i), (2, i + k + 1)) for i in range(1, k + 2)]
    return Graph.from_edges(G.labels, edges, "U", {"k": k})


def x_graph(h: int, n: int) -> Graph:
    """P_h x C_n with antipodal chords on layer 1 and layer h folded onto C_{n/2}."""
    if h < 2 or n < 4 or n % 2:
        raise InvalidParameter("X_{h,n} needs h >= 2 and even n >= 4")
    half = n // 2
    P = cartesian_product(path(h), cycle(n))
    edges = P.label_edges() + [((1, j), (1, j + half)) for j in range(1, half + 1)]

    def fold(v):
        return (h, wrap(v[1], half)) if v[0] == h else v

    labels = [(i, j) for i in range(1, h) for j in range(1, n + 1)]
    labels += [(h, j) for j in range(1, half + 1)]
    return Graph.from_edges(labels, [(fold(a), fold(b)) for a, b in edges],
                            "X", {"h": h, "n": n})


def _bottom_replaced(k: int, bottom_pairs, family: str) -> Graph:
    """reduced_drum(k+1, 2k+2) with its layer-1 edges replaced by the given pairs."""
    R = reduced_drum_direct(k + 1, 2 * k + 2)
    kept = [(a, b) for a, b in R.label_edges() if not (a[0] == 1 and b[0] == 1)]
    kept += [((1, a), (1, b)) for a, b in bottom_pairs]
    return Graph.from_edges(R.labels, kept, family, {"k": k})


def y_graph(k: int) -> Graph:
    """The Klein-bottle quadrangulating spanning subgraph Y_k of SG(2k+2, k)."""
    if k < 2:
        raise InvalidParameter("Y_k needs k >= 2")
    return _bottom_replaced(k, ell(k).label_edges(), "Y")


def z_graph(k: int) -> Graph:
    """The projective-plane quadrangulating spanning subgraph Z_k of SG(2k+2, k).

    Its layer 1 is C_{2k+2} plus the chords (c+k+1, k+2-c), c = 2..k,
    which together form a ladder P_{k+1} x P_2.
    """
    if k < 2:
        raise InvalidParameter("Z_k needs k >= 2")
    n = 2 * k + 2
    pairs = [(j, wrap(j + 1, n)) for j in range(1, n + 1)]
    pairs += [(c + k + 1, k + 2 - c) for c in range(2, k + 1)]
    return _bottom_replaced(k, pairs, "Z")


def q_graph() -> Graph:
    """Y_3 without the extra edges (1,2)(1,5) and (1,3)(1,6)."""
    Y = y_graph(3)
    G = Y.remove_label_edges([((1, 2), (1, 5)), ((1, 3), (1, 6))])
    return Graph(G.labels, G.adj, "Q", {})


# -- signed rotation systems -----------------------------------------------------

@dataclass(frozen=True)
class SignedEmbedding:
    """Per-vertex cyclic order of incident edge ids plus a sign per edge.

    ``edges[e]`` is the index pair of edge e in ``graph.edges()`` order.
    """
    graph: Graph
    edges: tuple
    rotations: tuple  # rotations[v] = tuple of edge ids in cyclic order
    signs: tuple  # signs[e] in {+1, -1}

    def __post_init__(self):
        G = self.graph
        if len(self.rotations) != len(G) or len(self.signs) != len(self.edges):
            raise InvalidEmbedding("rotation system does not match the graph")
        for v, rot in enumerate(self.rotations):
            inc = {e for e, (a, b) in enumerate(self.edges) if v in (a, b)}
            if len(rot) != len(inc) or set(rot) != inc:
                raise InvalidEmbedding(f"rotation at {G.labels[v]!r} is not a permutation "
                                       "of its incident edges")
        if any(s not in (1, -1) for s in self.signs):
            raise InvalidEmbedding("edge signs must be +1 or -1")

    def to_json_dict(self) -> dict:
        return {"rotations": {str(v): list(r) for v, r in enumerate(self.rotations)},
                "signs": {str(e): s for e, s in enumerate(self.signs)},
                "edges": [list(e) for e in self.edges]}


def trivial_embedding(G: Graph) -> SignedEmbedding:
    """Rotation in sorted neighbor order, all signs +1 (planar for cycles)."""
    edges = tuple(G.edges())
    inc = [[] for _ in range(len(G))]
    for e, (a, b) in enumerate(edges):
        inc[a].append(e)
        inc[b].append(e)
    return SignedEmbedding(G, edges, tuple(tuple(r) for r in inc), (1,) * len(edges))


def trace_faces(emb: SignedEmbedding) -> list[list[int]]:
    """Facial walks as lists of vertex indices.

    A walk state is (vertex, edge, sign).  Crossing edge e multiplies the
    sign by signs[e]; at the next vertex the walk continues with the
    successor of e in the rotation (sign +1) or its predecessor (-1).
    Orbits come in mirror pairs; one walk per pair is returned.
    """
    succ, pred = [], []
    for rot in emb.rotations:
        m = len(rot)
        succ.append({rot[i]: rot[(i + 1) % m] for i in range(m)})
        pred.append({rot[i]: rot[(i - 1) % m] for i in range(m)})

    def other(e, v):
        a, b = emb.edges[e]
        return b if v == a else a

    def step(state):
        v, e, s = state
        w = other(e, v)
        s2 = s * emb.signs[e]
        return w, (succ[w] if s2 > 0 else pred[w])[e], s2

    def mirror(state):
        v, e, s = state
        return other(e, v), e, -s * emb.signs[e]

    seen = set()
    faces = []
    for e, (a, b) in enumerate(emb.edges):
        for v in (a, b):
            for s in (1, -1):
                start = (v, e, s)
                if start in seen:
                    continue
                walk, state = [], start
                while True:
                    seen.add(state)
                    walk.append(state)
                    state = step(state)
                    if state == start:
                        break
                    if len(walk) > 4 * len(emb.edges):
                        raise InvalidEmbedding("face tracing did not close")
                for st in walk:
                    seen.add(mirror(st))
                faces.append([st[0] for st in walk])
    return faces


def euler_characteristic(emb: SignedEmbedding) -> int:
    return len(emb.graph) - len(emb.edges) + len(trace_faces(emb))


def is_orientable(emb: SignedEmbedding) -> bool:
    """Whether local flips can make every edge sign +1 (spanning-forest propagation)."""
    G = emb.graph
    flip = [0] * len(G)
    by_vertex = [[] for _ in range(len(G))]
    for e, (a, b) in enumerate(emb.edges):
        by_vertex[a].append((e, b))
        by_vertex[b].append((e, a))
    for root in range(len(G)):
        if flip[root]:
            continue
        flip[root] = 1
        stack = [root]
        while stack:
            v = stack.pop()
            for e, w in by_vertex[v]:
                if not flip[w]:
                    flip[w] = flip[v] * emb.signs[e]
                    stack.append(w)
    return all(flip[a] * flip[b] * emb.signs[e] == 1 for e, (a, b) in enumerate(emb.edges))


def is_quadrangulation(emb: SignedEmbedding) -> bool:
    return all(len(f) == 4 for f in trace_faces(emb))


def face_census(emb: SignedEmbedding) -> dict:
    faces = trace_faces(emb)
    V, E, F = len(emb.graph), len(emb.edges), len(faces)
    return {"V": V, "E": E, "F": F, "euler_characteristic": V - E + F,
            "orientable": is_orientable(emb),
            "face_lengths": dict(sorted(Counter(len(f) for f in faces).items()))}


def embedding_from_faces(G: Graph, faces) -> SignedEmbedding:
    """Signed rotation system of the closed surface obtained by gluing the given faces.

    Faces are cyclic sequences of vertex labels along edges of G.  Every
    edge must lie on exactly two face sides and the faces around each
    vertex must close up into a single disk.
    """
    eid = {}
    edges = tuple(G.edges())
    for e, (a, b) in enumerate(edges):
        eid[frozenset((a, b))] = e
    corners = [[] for _ in range(len(G))]  # (edge_in, edge_out, face)
    sides = Counter()
    for f, face in enumerate(faces):
        idx = [G.index(x) for x in face]
        m = len(idx)
        for p in range(m):
            a, b = idx[p], idx[(p + 1) % m]
            key = frozenset((a, b))
            if key not in eid or a == b:
                raise InvalidEmbedding(f"face {face} uses a non-edge {G.labels[a]}-{G.labels[b]}")
            sides[eid[key]] += 1
            prev = idx[p - 1]
            corners[a].append((eid[frozenset((prev, a))], eid[key], f))
    for e in range(len(edges)):
        if sides[e] != 2:
            raise InvalidEmbedding(f"edge {G.labels[edges[e][0]]}-{G.labels[edges[e][1]]} "
                                   f"lies on {sides[e]} face sides")
    rotations = []
    corner_face = []  # per vertex: {(e1, e2): face} for consecutive rotation entries
    for v in range(len(G)):
        link = {}
        for e1, e2, f in corners[v]:
            link.setdefault(e1, []).append((e2, f))
            link.setdefault(e2, []).append((e1, f))
        if any(len(x) != 2 for x in link.values()):
            raise InvalidEmbedding(f"vertex {G.labels[v]!r} is not a surface point")
        start = min(link)
        rot, faces_at = [start], {}
        prev, cur = None, start
        nxt, f = min(link[start])
        while True:
            faces_at[(cur, nxt)] = f
            prev, cur = cur, nxt
            if cur == start:
                break
            rot.append(cur)
            options = [x for x in link[cur] if x[0] != prev or x[1] != f]
            nxt, f = options[0]
        if len(rot) != len(link):
            raise InvalidEmbedding(f"link of {G.labels[v]!r} is not a single cycle")
        rotations.append(tuple(rot))
        corner_face.append(faces_at)
    signs = []
    for e, (a, b) in enumerate(edges):
        ra, rb = rotations[a], rotations[b]
        before_a = corner_face[a][(ra[ra.index(e) - 1], e)]
        after_b = corner_face[b][(e, rb[(rb.index(e) + 1) % len(rb)])]
        signs.append(1 if before_a == after_b else -1)
    return SignedEmbedding(G, edges, tuple(rotations), tuple(signs))


# -- grid drawings -------------------------------------------------------------------

def _grid_drawing(R: int, C: int, top: str):
    """Edges and faces of the rectangular drawing in grid coordinates (r, c)."""
    edges, faces = [], []
    for r in range(1, R + 1):
        for c in range(1, C):
            edges.append(((r, c), (r, c + 1)))
        edges.append(((r, C), (R + 1 - r, 1)))
    for r in range(1, R):
        for c in range(1, C + 1):
            edges.append(((r, c), (r + 1, c)))
    for r in range(1, R):
        for c in range(1, C):
            faces.append([(r, c), (r, c + 1), (r + 1, c + 1), (r + 1, c)])
        faces.append([(r, C), (R + 1 - r, 1), (R - r, 1), (r + 1, C)])
    if top == "klein":
        edges += [((R, c), (1, c)) for c in range(1, C + 1)]
        faces += [[(R, c), (R, c + 1), (1, c + 1), (1, c)] for c in range(1, C)]
        faces.append([(R, C), (1, C), (R, 1), (1, 1)])
    elif top == "skew":
        edges += [((R, c - 1), (1, c)) for c in range(2, C + 1)]
        edges.append(((1, 1), (1, C)))
        faces += [[(R, c), (R, c + 1), (1, c + 2), (1, c + 1)] for c in range(1, C - 1)]
        faces.append([(1, 1), (1, 2), (R, 1), (1, C)])
        faces.append([(R, C - 1), (R, C), (1, 1), (1, C)])
    elif top == "projective":
        if R != C:
            raise InvalidParameter("projective drawing needs a square grid")
        edges += [((R, c), (1, C + 1 - c)) for c in range(2, C)]
        faces += [[(R, c), (1, C + 1 - c), (1, C - c), (R, c + 1)] for c in range(2, C - 1)]
        faces.append([(R, 1), (R, 2), (1, C - 1), (1, C)])
        faces.append([(R, C - 1), (R, C), (1, 1), (1, 2)])
    else:
        raise InvalidParameter(f"unknown gluing {top!r}")
    return edges, faces


def _grid_label(R: int, C: int):
    def label(v):
        r, c = v
        return (r, c) if 2 * r <= R + 1 else (R + 1 - r, c + C)
    return label


def _embed_grid(G: Graph, R: int, C: int, top: str) -> SignedEmbedding:
    edges, faces = _grid_drawing(R, C, top)
    lab = _grid_label(R, C)
    drawn = Graph.from_edges(sorted({lab((r, c)) for r in range(1, R + 1) for c in range(1, C + 1)}),
                             [(lab(a), lab(b)) for a, b in edges])
    if len(drawn) != R * C or drawn.num_edges() != len(edges) or not drawn.same_as(G):
        raise InvalidEmbedding(f"grid drawing does not reproduce {G!r}")
    return embedding_from_faces(G, [[lab(v) for v in f] for f in faces])


def embed_x(h: int, n: int) -> SignedEmbedding:
    """X_{h,n} on the Klein bottle: 2h-1 rows, n/2 columns."""
    if n < 6:
        raise InvalidParameter("X_{h,4} has collapsed parallel edges; the embedding needs n >= 6")
    return _embed_grid(x_graph(h, n), 2 * h - 1, n // 2, "klein")


def embed_y(k: int) -> SignedEmbedding:
    """Y_k on the Klein bottle: (k+1) x (k+1) grid, skewed top gluing for odd k."""
    return _embed_grid(y_graph(k), k + 1, k + 1, "skew" if k % 2 else "klein")


def embed_z(k: int) -> SignedEmbedding:
    """Z_k on the projective plane: (k+1) x (k+1) grid with reversed top gluing."""
    return _embed_grid(z_graph(k), k + 1, k + 1, "projective")


def embed_family(family: str, **params) -> SignedEmbedding:
    family = family.upper()
    if family == "X":
        return embed_x(params["h"], params["n"])
    if family == "Y":
        return embed_y(params["k"])
    if family == "Z":
        return embed_z(params["k"])
    if family == "Q":
        return embed_q()
    raise InvalidParameter(f"no embedding for family {family!r}")


def delete_edges(emb: SignedEmbedding, label_edges) -> SignedEmbedding:
    """The embedding induced on G minus some edges (their two faces merge)."""
    G = emb.graph
    gone = {frozenset((G.index(a), G.index(b))) for a, b in label_edges}
    H = G.remove_label_edges(label_edges)
    H = Graph(H.labels, H.adj, G.family, G.params)
    new_id = {}
    for e, (a, b) in enumerate(emb.edges):
        if frozenset((a, b)) not in gone:
            new_id[e] = len(new_id)
    edges = tuple(emb.edges[e] for e in new_id)
    rotations = tuple(tuple(new_id[e] for e in rot if e in new_id) for rot in emb.rotations)
    signs = tuple(emb.signs[e] for e in new_id)
    return SignedEmbedding(H, edges, rotations, signs)


def embed_q() -> SignedEmbedding:
    """Q inside the Klein-bottle embedding of Y_3 (two pairs of squares merge into hexagons)."""
    emb = delete_edges(embed_y(3), [((1, 2), (1, 5)), ((1, 3), (1, 6))])
    Q = q_graph()
    return SignedEmbedding(Q, emb.edges, emb.rotations, emb.signs)
