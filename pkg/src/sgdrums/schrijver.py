"""Kneser and Schrijver graphs and per-vertex combinatorics on the cycle C_n.

A vertex label is the sorted tuple of its elements of [n]; ``mask`` gives
the bitmask (bit x-1 for element x) used for fast disjointness tests.
"""
from __future__ import annotations

from itertools import combinations

from .graph import ContractViolation, Graph, InvalidParameter

MAX_N = 64


def mask(subset) -> int:
    m = 0
    for x in subset:
        m |= 1 << (x - 1)
    return m


def wrap(x: int, n: int) -> int:
    """Representative of x modulo n in [1, n]."""
    return (x - 1) % n + 1


def is_independent(subset, n: int) -> bool:
    """No two cyclically consecutive elements of [n]."""
    s = set(subset)
    return all(wrap(x + 1, n) not in s for x in s) if n > 1 else len(s) <= 1


def _check(n: int, k: int):
    if k < 1 or n < 2 * k:
        raise InvalidParameter(f"need n >= 2k >= 2, got n={n}, k={k}")
    if n > MAX_N:
        raise InvalidParameter(f"n is capped at {MAX_N}")


def _disjointness_graph(n, k, subsets, family):
    masks = [mask(s) for s in subsets]
    edges = [(subsets[a], subsets[b])
             for a, b in combinations(range(len(subsets)), 2)
             if not masks[a] & masks[b]]
    return Graph.from_edges(subsets, edges, family, {"n": n, "k": k})


def kneser(n: int, k: int) -> Graph:
    _check(n, k)
    return _disjointness_graph(n, k, list(combinations(range(1, n + 1), k)), "kneser")


def schrijver(n: int, k: int) -> Graph:
    _check(n, k)
    subsets = [s for s in combinations(range(1, n + 1), k) if is_independent(s, n)]
    return _disjointness_graph(n, k, subsets, "schrijver")


def schrijver_vertex_count(n: int, k: int) -> int:
    """Closed form n/(n-k) * C(n-k, k) for the number of independent k-sets of C_n."""
    from math import comb
    return n * comb(n - k, k) // (n - k)


def complement_cycle_edges(v, n: int) -> frozenset[int]:
    """Indices a of cycle edges e_a = {a, a+1} with neither endpoint in v."""
    if not is_independent(v, n):
        raise ContractViolation(f"{v} is not independent in C_{n}")
    s = set(v)
    return frozenset(a for a in range(1, n + 1) if a not in s and wrap(a + 1, n) not in s)


def is_interlacing(X, Y, n: int) -> bool:
    """Elements of X and Y alternate when read around C_n."""
    if set(X) & set(Y):
        raise ContractViolation("interlacing is defined for disjoint sets")
    sx = set(X)
    seq = [x in sx for x in sorted(set(X) | set(Y))]
    return all(seq[i] != seq[(i + 1) % len(seq)] for i in range(len(seq)))


def is_regular(V, n: int) -> bool:
    """V meets every window {i, i+1, i+2} of three consecutive positions."""
    s = set(V)
    return all({i, wrap(i + 1, n), wrap(i + 2, n)} & s for i in range(1, n + 1))


def vertex_length(v, n: int) -> int:
    if len(v) != 2:
        raise InvalidParameter("vertex length is defined for 2-subsets")
    i, j = v
    d = abs(i - j)
    return min(d, n - d)


def components_on_cycle(subset, n: int) -> list[list[int]]:
    """Connected components of C_n induced on subset, as runs of consecutive positions."""
    s = set(subset)
    if len(s) == n:
        return [sorted(s)]
    start = next(x for x in range(1, n + 1) if x not in s)
    runs, cur = [], []
    for t in range(1, n + 1):
        x = wrap(start + t, n)
        if x in s:
            cur.append(x)
        elif cur:
            runs.append(cur)
            cur = []
    if cur:
        runs.append(cur)
    return runs


def rotate(subset, shift: int, n: int) -> tuple:
    return tuple(sorted(wrap(x + shift, n) for x in subset))


def reflect(subset, axis: int, n: int) -> tuple:
    """Image under x -> axis - x (mod n)."""
    return tuple(sorted(wrap(axis - x, n) for x in subset))
