"""Exact graph coloring by backtracking.

DSatur branching (fewest remaining colors first, ties by degree then
index) with forward checking, and color-symmetry breaking: a greedily
found clique is precolored 0..w-1 and a branch may open at most one new
color.  Every answer is exact; running out of time raises SolverTimeout.
"""
from __future__ import annotations

import os
import sys
import time
from itertools import product

from .graph import Graph, InvalidParameter

DEFAULT_TIMEOUT = float(os.environ.get("SGDRUMS_TIMEOUT", "60"))


class SolverTimeout(RuntimeError):
    pass


def greedy_clique(G: Graph) -> list[int]:
    """A maximal clique grown from the highest-degree vertex, deterministic."""
    order = sorted(range(len(G)), key=lambda v: (-G.degree(v), v))
    best: list[int] = []
    for root in order[: min(len(order), 8)]:
        clique = [root]
        cand = set(G.adj[root])
        while cand:
            v = min(cand, key=lambda u: (-len(G.adj[u] & cand), u))
            clique.append(v)
            cand &= G.adj[v]
        if len(clique) > len(best):
            best = clique
    return best


class _Search:
    def __init__(self, G: Graph, q: int, deadline: float | None):
        self.n = len(G)
        self.q = q
        self.adj = [tuple(sorted(nb)) for nb in G.adj]
        self.deg = [len(nb) for nb in G.adj]
        self.color = [-1] * self.n
        # forbidden[v][c] counts colored neighbors of v with color c
        self.forbidden = [[0] * q for _ in range(self.n)]
        self.nfree = [q] * self.n
        self.deadline = deadline
        self.nodes = 0

    def assign(self, v: int, c: int) -> bool:
        """Color v with c; False if some uncolored neighbor is left with no color."""
        self.color[v] = c
        ok = True
        for w in self.adj[v]:
            row = self.forbidden[w]
            if row[c] == 0:
                self.nfree[w] -= 1
                if self.nfree[w] == 0 and self.color[w] < 0:
                    ok = False
            row[c] += 1
        return ok

    def unassign(self, v: int, c: int):
        self.color[v] = -1
        for w in self.adj[v]:
            row = self.forbidden[w]
            row[c] -= 1
            if row[c] == 0:
                self.nfree[w] += 1

    def pick(self) -> int:
        best, key = -1, None
        for v in range(self.n):
            if self.color[v] < 0:
                k = (self.nfree[v], -self.deg[v])
                if key is None or k < key:
                    best, key = v, k
        return best

    def run(self, left: int, used: int) -> bool:
        if left == 0:
            return True
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise SolverTimeout(f"no answer within the time limit ({self.nodes} nodes)")
        v = self.pick()
        row = self.forbidden[v]
        for c in range(min(used + 1, self.q)):
            if row[c]:
                continue
            if self.assign(v, c) and self.run(left - 1, max(used, c + 1)):
                return True
            self.unassign(v, c)
        return False


def exists_q_coloring(G: Graph, q: int, timeout: float | None = None) -> tuple[int, ...] | None:
    """A proper coloring with colors 0..q-1, or None if none exists.

    ``timeout`` is in seconds (default from SGDRUMS_TIMEOUT, else 60);
    pass 0 or a negative value for no limit.
    """
    if q < 1:
        raise InvalidParameter("q must be >= 1")
    if not len(G):
        return ()
    timeout = DEFAULT_TIMEOUT if timeout is None else timeout
    deadline = time.monotonic() + timeout if timeout and timeout > 0 else None
    clique = greedy_clique(G)
    if len(clique) > q:
        return None
    s = _Search(G, q, deadline)
    for c, v in enumerate(clique):
        if not s.assign(v, c):
            return None
    if sys.getrecursionlimit() < len(G) + 100:
        sys.setrecursionlimit(len(G) + 100)
    if s.run(len(G) - len(clique), len(clique)):
        return tuple(s.color)
    return None


_CHI_CACHE: dict = {}


def chromatic_number(G: Graph, timeout: float | None = None) -> int:
    """Least q admitting a proper q-coloring (the timeout applies per query).

    Results are cached by vertex count and edge list.
    """
    if not len(G):
        return 0
    key = (len(G), tuple(G.edges()))
    if key in _CHI_CACHE:
        return _CHI_CACHE[key]
    q = max(1, len(greedy_clique(G)))
    while exists_q_coloring(G, q, timeout) is None:
        q += 1
    if len(_CHI_CACHE) > 4096:
        _CHI_CACHE.clear()
    _CHI_CACHE[key] = q
    return q


def optimal_coloring(G: Graph, timeout: float | None = None) -> tuple[int, ...]:
    q = chromatic_number(G, timeout)
    return exists_q_coloring(G, q, timeout)


def naive_colorable(G: Graph, q: int) -> bool:
    """Exhaustive enumeration over all q^|V| maps; an independent oracle for tiny graphs."""
    edges = G.edges()
    for col in product(range(q), repeat=len(G)):
        if all(col[i] != col[j] for i, j in edges):
            return True
    return False


def proper_colorings(G: Graph, q: int):
    """Yield every proper q-coloring (as a tuple) by plain backtracking in index order."""
    n = len(G)
    col = [-1] * n
    earlier = [[w for w in G.adj[v] if w < v] for v in range(n)]

    def rec(v):
        if v == n:
            yield tuple(col)
            return
        for c in range(q):
            if all(col[w] != c for w in earlier[v]):
                col[v] = c
                yield from rec(v + 1)
        col[v] = -1

    yield from rec(0)
