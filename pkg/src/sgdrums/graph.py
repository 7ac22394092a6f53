"""Finite simple labeled graphs, products, identification and map checks.

Vertices are addressed by index; labels are carried metadata used for
lookup, serialization and label-wise comparison of graphs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Sequence


class InvalidParameter(ValueError):
    """A construction was called with parameters outside its domain."""


class ContractViolation(ValueError):
    """An operation's precondition on its (well-formed) inputs failed."""


class LoopError(ValueError):
    """Identification would merge two adjacent vertices."""


@dataclass(frozen=True, eq=False)
class Graph:
    labels: tuple
    adj: tuple  # tuple[frozenset[int], ...]
    family: str = ""
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.labels) != len(self.adj):
            raise ContractViolation("labels and adjacency differ in length")
        index = {}
        for i, lab in enumerate(self.labels):
            if lab in index:
                raise ContractViolation(f"duplicate label {lab!r}")
            index[lab] = i
        for i, nb in enumerate(self.adj):
            if i in nb:
                raise ContractViolation(f"self-loop at {self.labels[i]!r}")
            for j in nb:
                if i not in self.adj[j]:
                    raise ContractViolation("adjacency is not symmetric")
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, labels: Iterable[Hashable], edges: Iterable[tuple],
                   family: str = "", params: dict | None = None) -> "Graph":
        """Build a graph from labels and edges given as label pairs.

        Duplicate edges are collapsed; a label pair (a, a) raises LoopError.
        """
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        nbrs = [set() for _ in labels]
        for a, b in edges:
            i, j = index[a], index[b]
            if i == j:
                raise LoopError(f"loop at {a!r}")
            nbrs[i].add(j)
            nbrs[j].add(i)
        return cls(labels, tuple(frozenset(s) for s in nbrs), family, dict(params or {}))

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        name = self.family or "Graph"
        return f"<{name} {self.params} |V|={len(self)} |E|={self.num_edges()}>"

    def index(self, label) -> int:
        return self._index[label]

    def has_label(self, label) -> bool:
        return label in self._index

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adj[i]

    def has_label_edge(self, a, b) -> bool:
        return self._index[b] in self.adj[self._index[a]]

    def degree(self, i: int) -> int:
        return len(self.adj[i])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as index pairs (i, j), i < j, in lexicographic order."""
        return [(i, j) for i in range(len(self)) for j in sorted(self.adj[i]) if i < j]

    def label_edges(self) -> list[tuple]:
        return [(self.labels[i], self.labels[j]) for i, j in self.edges()]

    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def masks(self) -> list[int]:
        """Neighborhoods as integer bitmasks over vertex indices."""
        out = []
        for nb in self.adj:
            m = 0
            for j in nb:
                m |= 1 << j
            out.append(m)
        return out

    def induced_subgraph(self, indices: Iterable[int]) -> "Graph":
        keep = sorted(set(indices))
        pos = {v: p for p, v in enumerate(keep)}
        adj = tuple(frozenset(pos[w] for w in self.adj[v] if w in pos) for v in keep)
        return Graph(tuple(self.labels[v] for v in keep), adj, self.family, dict(self.params))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs = [set(nb) for nb in self.adj]
        for i, j in edges:
            if j not in nbrs[i]:
                raise ContractViolation(f"({i}, {j}) is not an edge")
            nbrs[i].discard(j)
            nbrs[j].discard(i)
        return Graph(self.labels, tuple(frozenset(s) for s in nbrs), self.family, dict(self.params))

    def remove_label_edges(self, edges: Iterable[tuple]) -> "Graph":
        return self.remove_edges((self._index[a], self._index[b]) for a, b in edges)

    def relabel(self, f: Callable[[Any], Any], family: str | None = None,
                params: dict | None = None) -> "Graph":
        return Graph(tuple(f(lab) for lab in self.labels), self.adj,
                     self.family if family is None else family,
                     dict(self.params if params is None else params))

    def is_connected(self) -> bool:
        if not len(self):
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self)

    def bipartition(self) -> list[int] | None:
        """A proper 2-coloring as a list of 0/1, or None if not bipartite."""
        side = [-1] * len(self)
        for root in range(len(self)):
            if side[root] >= 0:
                continue
            side[root] = 0
            stack = [root]
            while stack:
                v = stack.pop()
                for w in self.adj[v]:
                    if side[w] < 0:
                        side[w] = 1 - side[v]
                        stack.append(w)
                    elif side[w] == side[v]:
                        return None
        return side

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def same_as(self, other: "Graph") -> bool:
        """Label-wise equality: same label set and same labeled edge set."""
        if set(self.labels) != set(other.labels):
            return False
        return _label_edge_set(self) == _label_edge_set(other)

    # -- serialization -------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "vertices": [label_to_json(lab) for lab in self.labels],
            "edges": [[i, j] for i, j in self.edges()],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_json_dict(), **kw)

    def to_dot(self) -> str:
        lines = [f'graph "{self.family or "G"}" {{']
        names = [label_to_name(lab) for lab in self.labels]
        for name in names:
            lines.append(f'  "{name}";')
        for i, j in self.edges():
            lines.append(f'  "{names[i]}" -- "{names[j]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _label_edge_set(g: Graph) -> set[frozenset]:
    return {frozenset(e) for e in g.label_edges()}


def label_to_json(lab):
    if isinstance(lab, (tuple, list, frozenset, set)):
        items = sorted(lab) if isinstance(lab, (frozenset, set)) else lab
        return [label_to_json(x) for x in items]
    return lab


def label_to_name(lab) -> str:
    if isinstance(lab, (tuple, list)):
        return "{" + ",".join(label_to_name(x) for x in lab) + "}"
    return str(lab)


def graph_from_json(data: dict | str) -> Graph:
    """Inverse of Graph.to_json_dict; list labels become tuples."""
    if isinstance(data, str):
        data = json.loads(data)

    def tup(x):
        return tuple(tup(y) for y in x) if isinstance(x, list) else x

    labels = [tup(x) for x in data["vertices"]]
    edges = [(labels[i], labels[j]) for i, j in data["edges"]]
    return Graph.from_edges(labels, edges, data.get("family", ""), data.get("params", {}))


# -- elementary families ----------------------------------------------------

def path(m: int) -> Graph:
    if m < 2:
        raise InvalidParameter("path needs m >= 2")
    return Graph.from_edges(range(1, m + 1), [(i, i + 1) for i in range(1, m)],
                            "path", {"m": m})


def cycle(m: int) -> Graph:
    if m < 3:
        raise InvalidParameter("cycle needs m >= 3")
    edges = [(i, i % m + 1) for i in range(1, m + 1)]
    return Graph.from_edges(range(1, m + 1), edges, "cycle", {"m": m})


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidParameter("complete_bipartite needs a, b >= 1")
    left = [(0, i) for i in range(1, a + 1)]
    right = [(1, j) for j in range(1, b + 1)]
    return Graph.from_edges(left + right, [(u, v) for u in left for v in right],
                            "complete_bipartite", {"a": a, "b": b})


def complete(m: int) -> Graph:
    if m < 1:
        raise InvalidParameter("complete needs m >= 1")
    return Graph.from_edges(range(1, m + 1),
                            [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)],
                            "complete", {"m": m})


def cartesian_product(F: Graph, G: Graph) -> Graph:
    """F box G on label pairs (a, c); layers {a} x V(G) follow F's order."""
    if not len(F) or not len(G):
        raise InvalidParameter("cartesian_product needs nonempty factors")
    labels = [(a, c) for a in F.labels for c in G.labels]
    edges = [((a, c), (a, d)) for a in F.labels for c, d in G.label_edges()]
    edges += [((a, c), (b, c)) for a, b in F.label_edges() for c in G.labels]
    return Graph.from_edges(labels, edges, "product",
                            {"left": F.family, "right": G.family})


def identify_vertices(G: Graph, pairs: Sequence[tuple[int, int]],
                      merged_label: Callable[[Any, Any], Any] | None = None) -> Graph:
    """Identify each index pair (a, b) into one vertex.

    The merged vertex sits at position min(a, b) and is labeled
    ``merged_label(label_a, label_b)`` (default: the pair of labels).
    Parallel edges created by the identification are collapsed.
    """
    rep = list(range(len(G)))
    seen = set()
    for a, b in pairs:
        if a == b or a in seen or b in seen:
            raise InvalidParameter("identification pairs must be disjoint")
        seen.update((a, b))
        if G.has_edge(a, b):
            raise LoopError(f"{G.labels[a]!r} and {G.labels[b]!r} are adjacent")
        lo, hi = min(a, b), max(a, b)
        rep[hi] = lo
    merged = {}
    for a, b in pairs:
        lab = (G.labels[a], G.labels[b]) if merged_label is None else merged_label(G.labels[a], G.labels[b])
        merged[min(a, b)] = lab
    keep = [v for v in range(len(G)) if rep[v] == v]
    labels = [merged.get(v, G.labels[v]) for v in keep]
    edges = set()
    for i, j in G.edges():
        ri, rj = rep[i], rep[j]
        if ri == rj:
            raise LoopError("identification created a loop")
        edges.add((min(ri, rj), max(ri, rj)))
    lab_of = dict(zip(keep, labels))
    return Graph.from_edges(labels, [(lab_of[i], lab_of[j]) for i, j in sorted(edges)],
                            G.family, dict(G.params))


# -- vertex maps ---------------------------------------------------------------

@dataclass(frozen=True)
class VertexMap:
    domain: Graph
    codomain: Graph
    images: tuple  # images[v] is a codomain index

    def __post_init__(self):
        if len(self.images) != len(self.domain):
            raise ContractViolation("vertex map is not total")
        for w in self.images:
            if not 0 <= w < len(self.codomain):
                raise ContractViolation(f"image {w} outside codomain")

    @classmethod
    def from_labels(cls, domain: Graph, codomain: Graph, f: Callable[[Any], Any]) -> "VertexMap":
        return cls(domain, codomain, tuple(codomain.index(f(lab)) for lab in domain.labels))

    def __call__(self, v: int) -> int:
        return self.images[v]

    def label_of(self, label):
        return self.codomain.labels[self.images[self.domain.index(label)]]

    def fibers(self) -> list[list[int]]:
        out = [[] for _ in range(len(self.codomain))]
        for v, w in enumerate(self.images):
            out[w].append(v)
        return out

    def inverse(self) -> "VertexMap":
        inv = [None] * len(self.codomain)
        for v, w in enumerate(self.images):
            if inv[w] is not None:
                raise ContractViolation("map is not injective")
            inv[w] = v
        if None in inv:
            raise ContractViolation("map is not surjective")
        return VertexMap(self.codomain, self.domain, tuple(inv))


def identity_map(G: Graph) -> VertexMap:
    return VertexMap(G, G, tuple(range(len(G))))


def is_homomorphism(m: VertexMap) -> bool:
    H = m.codomain
    return all(H.has_edge(m.images[i], m.images[j]) for i, j in m.domain.edges())


def is_cover(m: VertexMap) -> bool:
    """Local bijectivity: N(v) maps bijectively onto N(f(v)) for every v."""
    if not is_homomorphism(m):
        raise ContractViolation("cover check needs a homomorphism")
    G, H = m.domain, m.codomain
    for v in range(len(G)):
        image = [m.images[w] for w in G.adj[v]]
        if len(set(image)) != len(image) or set(image) != H.adj[m.images[v]]:
            return False
    return True


def is_double_cover(m: VertexMap) -> bool:
    return is_cover(m) and all(len(f) == 2 for f in m.fibers())


def verify_isomorphism(m: VertexMap) -> bool:
    """True iff m is a bijection and both m and its inverse are homomorphisms."""
    if len(m.domain) != len(m.codomain) or m.domain.num_edges() != m.codomain.num_edges():
        return False
    if len(set(m.images)) != len(m.images):
        return False
    return is_homomorphism(m) and is_homomorphism(m.inverse())


def is_spanning_subgraph(H: Graph, G: Graph, f: Callable[[Any], Any] | None = None) -> bool:
    """Label-wise spanning containment of H in G, optionally through a label map f."""
    f = f or (lambda x: x)
    mapped = [f(lab) for lab in H.labels]
    if len(set(mapped)) != len(mapped) or set(mapped) != set(G.labels):
        return False
    return all(G.has_label_edge(f(a), f(b)) for a, b in H.label_edges())


def is_subgraph(H: Graph, G: Graph) -> bool:
    """Label-wise containment (vertex labels of H among G's, edges preserved)."""
    if not all(G.has_label(lab) for lab in H.labels):
        return False
    return all(G.has_label_edge(a, b) for a, b in H.label_edges())
