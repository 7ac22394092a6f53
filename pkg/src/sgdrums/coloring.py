"""Proper-coloring checks and explicit colorings of drums and Schrijver graphs.

A coloring is a tuple of hashable color names indexed by vertex.  Every
constructor verifies its output before returning it and raises
ConstructionError if the check fails.
"""
from __future__ import annotations

from .drum import reduced_drum_direct
from .graph import ContractViolation, Graph, InvalidParameter
from .schrijver import (components_on_cycle, is_interlacing, is_regular,
                        rotate, schrijver, vertex_length, wrap)
from .quadrangulation import extra_edges, u_graph, y_graph
from .solver import chromatic_number, exists_q_coloring  # noqa: F401  (re-exported)

SPECIAL = 0


class ConstructionError(RuntimeError):
    """A constructive coloring failed its own verification."""


class NoColoringExists(ValueError):
    pass


def _total(G: Graph, c) -> None:
    if len(c) != len(G) or any(x is None for x in c):
        raise InvalidParameter("coloring must be total on V(G)")


def monochromatic_edges(G: Graph, c) -> list[tuple[int, int]]:
    _total(G, c)
    return [(i, j) for i, j in G.edges() if c[i] == c[j]]


def is_proper(G: Graph, c) -> bool:
    return not monochromatic_edges(G, c)


def num_colors(c) -> int:
    return len(set(c))


def normalize_colors(c) -> tuple[tuple, list]:
    """Renumber color names to 0..q-1 in sorted order; returns (coloring, name table)."""
    names = sorted(set(c))
    index = {x: i for i, x in enumerate(names)}
    return tuple(index[x] for x in c), names


def coloring_from_labels(G: Graph, f) -> tuple:
    return tuple(f(lab) for lab in G.labels)


def _require_proper(G, c, what):
    bad = monochromatic_edges(G, c)
    if bad:
        raise ConstructionError(f"{what}: {len(bad)} monochromatic edges, e.g. "
                                f"{G.labels[bad[0][0]]}-{G.labels[bad[0][1]]}")
    return c


def _require_unique(G, c, target, what):
    bad = monochromatic_edges(G, c)
    want = [tuple(sorted((G.index(target[0]), G.index(target[1]))))]
    if bad != want:
        raise ConstructionError(f"{what}: monochromatic edges {bad}, expected {want}")
    return c


# -- reduced drums -------------------------------------------------------------

def two_coloring_reduced_drum(h: int, n: int) -> tuple:
    """Parity of i+j on canonical representatives; needs h + n/2 odd."""
    if (h + n // 2) % 2 == 0:
        raise InvalidParameter("a 2-coloring needs h + n/2 odd")
    G = reduced_drum_direct(h, n)
    c = coloring_from_labels(G, lambda v: (v[0] + v[1]) % 2)
    return _require_proper(G, c, "parity coloring")


def four_coloring_reduced_drum(h: int, n: int) -> tuple:
    """A proper coloring with colors 0..3; needs h + n/2 even.

    The top layer is colored greedily by index; lower layers take a color
    of parity i+j, and the layer just below the top avoids its unique
    top neighbor.
    """
    if (h + n // 2) % 2:
        raise InvalidParameter("the 4-coloring construction needs h + n/2 even")
    G = reduced_drum_direct(h, n)
    top = (h + 1) // 2
    col: dict[tuple, int] = {}
    for v in G.labels:
        if v[0] == top:
            taken = {col.get(G.labels[w]) for w in G.adj[G.index(v)]}
            col[v] = min(c for c in range(4) if c not in taken)
    for v in G.labels:
        i, j = v
        if i == top:
            continue
        options = ((i + j) % 2, (i + j) % 2 + 2)
        if i == top - 1:
            above = col[G.labels[next(w for w in G.adj[G.index(v)] if G.labels[w][0] == top)]]
            col[v] = options[0] if options[0] != above else options[1]
        else:
            col[v] = options[0]
    c = coloring_from_labels(G, col.__getitem__)
    return _require_proper(G, c, "four-coloring")


# -- Schrijver graphs: colorings with a single monochromatic edge -----------

def _edge_check(n, k, V, W):
    V, W = tuple(sorted(V)), tuple(sorted(W))
    G = schrijver(n, k)
    if not (G.has_label(V) and G.has_label(W) and G.has_label_edge(V, W)):
        raise InvalidParameter(f"{V}{W} is not an edge of SG({n},{k})")
    return G, V, W


def basic_coloring(n: int, k: int, V, W, choose=max) -> tuple:
    """An (n-2k+1)-coloring for the edge VW.

    Colors are the elements of D = [n] minus (V and W), plus SPECIAL (0);
    a vertex U gets ``choose(U & D)`` when that set is nonempty.
    """
    G, V, W = _edge_check(n, k, V, W)
    D = set(range(1, n + 1)) - set(V) - set(W)
    return tuple(choose(set(U) & D) if set(U) & D else SPECIAL for U in G.labels)


def basic_coloring_is_unique(n: int, V, W) -> bool:
    """Whether C_n[V u W] is connected or has exactly two odd components."""
    runs = components_on_cycle(set(V) | set(W), n)
    return len(runs) == 1 or (len(runs) == 2 and all(len(r) % 2 for r in runs))


def regular_edge_coloring(n: int, k: int, V, W) -> tuple:
    """(n-2k+1)-coloring whose only monochromatic edge is VW, for regular V, W.

    Works in labels rotated so that 1 is in V: start from the basic
    coloring choosing the largest element of D, then for every other
    monochromatic edge XY (1 in X) set a = min(X - V), b = min(Y - W) and
    recolor X with b-1 when b < a, else Y with a-1.
    """
    G, V, W = _edge_check(n, k, V, W)
    if not (is_regular(V, n) and is_regular(W, n)):
        raise InvalidParameter("both endpoints must be regular")
    shift = 1 - V[0]
    rV, rW = rotate(V, shift, n), rotate(W, shift, n)
    D = set(range(1, n + 1)) - set(rV) - set(rW)
    rot = {U: rotate(U, shift, n) for U in G.labels}
    f = {}
    for U in G.labels:
        meet = set(rot[U]) & D
        f[rot[U]] = max(meet) if meet else SPECIAL
    specials = [rot[U] for U in G.labels if f[rot[U]] == SPECIAL]
    sv, sw = set(rV), set(rW)
    fixes = {}
    for X in specials:
        if 1 not in X:
            continue
        Y = tuple(sorted((sv | sw) - set(X)))
        if set(X) & set(Y) or Y not in f or (X, Y) == (rV, rW):
            continue
        a = min(set(X) - sv)
        b = min(set(Y) - sw)
        if b < a:
            fixes[X] = b - 1
        else:
            fixes[Y] = a - 1
    f.update(fixes)
    c = tuple(wrap(f[rot[U]] - shift, n) if f[rot[U]] != SPECIAL else SPECIAL
              for U in G.labels)
    return _require_unique(G, c, (V, W), "regular-edge coloring")


def sg_n2_edge_coloring(n: int, X, Y) -> tuple:
    """(n-3)-coloring of SG(n,2) whose only monochromatic edge is XY.

    Needs XY interlacing with min(l(X), l(Y)) <= 3.  A length-2 endpoint
    is handled by the basic coloring; otherwise labels are moved by a
    symmetry of C_n to X = {1,4}, Y = {2,i} and the two special colors 0
    and -1 are used on subsets of {1,2,3,4,i}.
    """
    G, X, Y = _edge_check(n, 2, X, Y)
    if not is_interlacing(X, Y, n):
        raise InvalidParameter("edge must be interlacing")
    lx, ly = vertex_length(X, n), vertex_length(Y, n)
    if min(lx, ly) > 3:
        raise InvalidParameter("an endpoint of length at most 3 is required")
    if min(lx, ly) == 2:
        c = basic_coloring(n, 2, X, Y)
        return _require_unique(G, c, (X, Y), "basic coloring")
    A, B = (X, Y) if lx == 3 else (Y, X)
    # a dihedral map sending A to {1,4} with the short-arc element of B at 2
    for s in (A[0], A[1]):
        if wrap(s + 3, n) in A:
            start = s
            break
    inner = [wrap(start + 1, n), wrap(start + 2, n)]
    if inner[0] in B:
        fwd = lambda x: wrap(x - start + 1, n)  # noqa: E731
        back = lambda x: wrap(x + start - 1, n)  # noqa: E731
    else:
        fwd = lambda x: wrap(start + 3 - x + 1, n)  # noqa: E731
        back = lambda x: wrap(start + 4 - x, n)  # noqa: E731
    cB = tuple(sorted(fwd(x) for x in B))
    i = cB[1] if cB[0] == 2 else cB[0]
    zero = {(1, 3), tuple(sorted((1, i))), tuple(sorted((3, i)))}
    minus = {(1, 4), tuple(sorted((2, i))), (2, 4), tuple(sorted((4, i)))}
    colors = []
    for U in G.labels:
        cU = tuple(sorted(fwd(x) for x in U))
        big = [x for x in cU if x > 4 and x != i]
        if big:
            colors.append(back(max(big)))
        elif cU in zero:
            colors.append(0)
        elif cU in minus:
            colors.append(-1)
        else:
            raise ConstructionError(f"vertex {U} not covered")
    return _require_unique(G, tuple(colors), (X, Y), "SG(n,2) edge coloring")


# -- U_k and Y_k -----------------------------------------------------------------

def _expand(pattern: list) -> list[int]:
    out = []
    for part in pattern:
        if isinstance(part, tuple):
            s, times = part
            out += [int(ch) for ch in s] * times
        else:
            out += [int(ch) for ch in part]
    return out


def _even_strings(k):
    r = k // 2 - 1
    return (_expand(["012", ("01", r), "020", ("12", r)]),
            _expand(["201", ("20", r), "201", ("20", r)]))


def _odd_boundary_strings(k):
    r = (k - 1) // 2
    return (_expand(["0", ("21", r), "0", ("10", r), "21"]),
            _expand(["1", ("02", r), "1", ("01", r), "02"]))


def _uk_dict(k: int, e: tuple[int, int]) -> dict:
    n = 2 * k + 2
    a, b = sorted(e)
    if (a, b) not in extra_edges(k):
        raise InvalidParameter(f"(1,{a})(1,{b}) is not an extra edge of U_{k}")
    if k % 2 == 0:
        low, high = _even_strings(k)
        s = a - 1
        return {(L, j): row[wrap(j - s, n) - 1] for L, row in ((1, low), (2, high))
                for j in range(1, n + 1)}
    if (a, b) == (1, k + 1):
        low, high = _odd_boundary_strings(k)
        return {(L, j): row[j - 1] for L, row in ((1, low), (2, high)) for j in range(1, n + 1)}
    if (a, b) == (k + 1, 2 * k + 1):
        low, high = _odd_boundary_strings(k)
        return {(L, j): row[wrap(n - j, n) - 1] for L, row in ((1, low), (2, high))
                for j in range(1, n + 1)}
    if k == 3:
        raise NoColoringExists(f"U_3 minus (1,{a})(1,{b}) is not 3-colorable")
    c = _uk_dict(k - 1, (a, b))
    c[(1, n - 1)] = c[(1, 1)]
    c[(2, n - 1)] = c[(2, 1)]
    U = u_graph(k).remove_label_edges([((1, a), (1, b))])
    for v in ((2, n), (1, n)):
        taken = {c.get(U.labels[w]) for w in U.adj[U.index(v)]}
        c[v] = min(x for x in range(3) if x not in taken)
    return c


def uk_minus_edge_coloring(k: int, e: tuple[int, int]) -> tuple:
    """Proper 3-coloring of U_k minus the extra edge (1,a)(1,b), e = (a, b).

    For even k the second layer also gets equal colors on antipodal
    positions.
    """
    if k < 3:
        raise InvalidParameter("U_k needs k >= 3")
    a, b = sorted(e)
    c = _uk_dict(k, (a, b))
    U = u_graph(k).remove_label_edges([((1, a), (1, b))])
    col = coloring_from_labels(U, c.__getitem__)
    _require_proper(U, col, f"U_{k} minus extra edge")
    if k % 2 == 0 and any(c[(2, j)] != c[(2, j + k + 1)] for j in range(1, k + 2)):
        raise ConstructionError("second layer is not antipodally symmetric")
    return col


def extend_to_Yk(k: int, c) -> tuple:
    """Lift a 3-coloring of U_k (minus an extra edge) to Y_k (minus the same edge).

    Layers 1 and 2 are copied and each higher layer is the previous one
    shifted by one position.
    """
    n = 2 * k + 2
    U = u_graph(k)
    base = {lab: c[i] for i, lab in enumerate(U.labels)}
    Y = y_graph(k)
    layers = max(v[0] for v in Y.labels)
    col = {}
    for j in range(1, n + 1):
        col[(1, j)] = base[(1, j)]
        col[(2, j)] = base[(2, j)]
    for L in range(3, layers + 1):
        for j in range(1, n + 1):
            col[(L, j)] = col[(L - 1, wrap(j + 1, n))]
    missing = [v for v in Y.labels if v not in col]
    if missing:
        raise ContractViolation(f"unexpected Y_{k} labels {missing[:3]}")
    return coloring_from_labels(Y, col.__getitem__)


def yk_minus_edge_coloring(k: int, e: tuple[int, int]) -> tuple:
    """Proper 3-coloring of Y_k minus the bottom extra edge e, via U_k."""
    a, b = sorted(e)
    col = extend_to_Yk(k, uk_minus_edge_coloring(k, (a, b)))
    Y = y_graph(k).remove_label_edges([((1, a), (1, b))])
    return _require_proper(Y, col, f"Y_{k} minus extra edge")
