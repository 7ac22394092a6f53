"""Winding numbers of proper 3-colorings along oriented cycles.

Colors are 0, 1, 2.  An oriented edge ab gets weight +1 or -1 according
to f(b) - f(a) mod 3; the winding number of an oriented cycle is the
weight sum divided by three.  The ``check_*`` functions test the
classical identities of this calculus on concrete colorings and return
a count of violations together with the number of cases examined.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from .graph import ContractViolation, Graph, InvalidParameter, cartesian_product, complete_bipartite, cycle, path
from .solver import proper_colorings

DEFAULT_SEED = 20240601


class MonochromaticEdge(ContractViolation):
    pass


@dataclass(frozen=True)
class OrientedCycle:
    """A cyclic vertex sequence v_1 .. v_m; consecutive vertices (and v_m, v_1) adjacent."""
    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 3:
            raise InvalidParameter("a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidParameter("cycle vertices must be distinct")

    def oriented_edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def reversed(self) -> "OrientedCycle":
        return OrientedCycle(self.vertices[::-1])

    def check_in(self, G: Graph) -> "OrientedCycle":
        for a, b in self.oriented_edges():
            if not G.has_edge(a, b):
                raise InvalidParameter(f"{a}-{b} is not an edge")
        return self

    def __len__(self):
        return len(self.vertices)


def edge_weight(f, a, b) -> int:
    """+1 or -1, congruent to f[b] - f[a] modulo 3."""
    d = (f[b] - f[a]) % 3
    if d == 0:
        raise MonochromaticEdge(f"edge {a}-{b} is monochromatic (color {f[a]})")
    return 1 if d == 1 else -1


def winding_number(f, C) -> int:
    """Signed winding number of the 3-coloring f (indexable by vertex) along C."""
    if not isinstance(C, OrientedCycle):
        C = OrientedCycle(C)
    total = sum(edge_weight(f, a, b) for a, b in C.oriented_edges())
    if total % 3:
        raise ContractViolation("weight sum not divisible by 3; colors must be in {0, 1, 2}")
    return total // 3


def abs_winding_number(f, C) -> int:
    return abs(winding_number(f, C))


# -- identity checks ---------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    cases: int = 0
    violations: int = 0
    example: object = None

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def record(self, good: bool, witness=None):
        self.cases += 1
        if not good:
            self.violations += 1
            if self.example is None:
                self.example = witness

    def to_json_dict(self) -> dict:
        return {"name": self.name, "cases": self.cases, "violations": self.violations,
                "status": "pass" if self.ok else "fail", "example": self.example}


def check_cycle_parity(max_m: int = 10) -> CheckResult:
    """|W| has the parity of the cycle length, over every proper 3-coloring of C_m."""
    res = CheckResult("cycle_parity")
    for m in range(3, max_m + 1):
        C = OrientedCycle(range(m))
        for f in proper_colorings(cycle(m), 3):
            w = winding_number(f, C)
            res.record((w - m) % 2 == 0 and abs(w) <= m / 3, {"m": m, "coloring": f})
    return res


def check_reversal(max_m: int = 8) -> CheckResult:
    res = CheckResult("reversal_negates")
    for m in range(3, max_m + 1):
        C = OrientedCycle(range(m))
        for f in proper_colorings(cycle(m), 3):
            res.record(winding_number(f, C.reversed()) == -winding_number(f, C), {"m": m, "coloring": f})
    return res


def check_four_cycles() -> CheckResult:
    res = CheckResult("four_cycle_zero")
    C = OrientedCycle(range(4))
    for f in proper_colorings(cycle(4), 3):
        res.record(winding_number(f, C) == 0, {"coloring": f})
    return res


def _layer_cycle(G: Graph, layer: int, m: int) -> OrientedCycle:
    return OrientedCycle([G.index((layer, j)) for j in range(1, m + 1)])


def check_layer_equality(max_m: int = 8, h: int = 2, samples: int = 0, seed: int = DEFAULT_SEED) -> CheckResult:
    """W on the bottom layer of P_h x C_m equals W on the top layer.

    Exhaustive over all proper 3-colorings when ``samples`` is 0, else
    that many colorings drawn uniformly from the full list per m.
    """
    res = CheckResult(f"layer_equality_h{h}")
    rng = random.Random(seed)
    for m in range(3, max_m + 1):
        G = cartesian_product(path(h), cycle(m))
        bottom, top = _layer_cycle(G, 1, m), _layer_cycle(G, h, m)
        cols = proper_colorings(G, 3)
        if samples:
            pool = list(cols)
            cols = (rng.choice(pool) for _ in range(samples))
        for f in cols:
            res.record(winding_number(f, bottom) == winding_number(f, top), {"m": m, "coloring": f})
    return res


def random_proper_3_coloring(G: Graph, rng: random.Random, tries: int = 10000):
    """A proper 3-coloring by randomized greedy with restarts (None if all attempts fail)."""
    order = list(range(len(G)))
    for _ in range(tries):
        rng.shuffle(order)
        f = [-1] * len(G)
        for v in order:
            free = [c for c in range(3) if all(f[w] != c for w in G.adj[v])]
            if not free:
                break
            f[v] = rng.choice(free)
        else:
            return tuple(f)
    return None


def check_layer_equality_sampled(h: int, n: int, samples: int = 1000, seed: int = DEFAULT_SEED) -> CheckResult:
    """Randomized layer equality on P_h x C_n, for sizes too large to enumerate."""
    res = CheckResult(f"layer_equality_sampled_h{h}_n{n}")
    rng = random.Random(seed)
    G = cartesian_product(path(h), cycle(n))
    bottom, top = _layer_cycle(G, 1, n), _layer_cycle(G, h, n)
    for _ in range(samples):
        f = random_proper_3_coloring(G, rng)
        res.record(winding_number(f, bottom) == winding_number(f, top), {"coloring": f})
    return res


def _random_cycle_bipartite(m: int, rng: random.Random) -> list[int]:
    """A random cycle of K_{m,m} (vertex indices: side 0 is 0..m-1, side 1 is m..2m-1)."""
    length = rng.randint(2, m)
    left = rng.sample(range(m), length)
    right = rng.sample(range(m, 2 * m), length)
    return [x for pair in zip(left, right) for x in pair]


def all_cycles_bipartite(m: int):
    """Every cycle of K_{m,m} once per orientation class, starting at its least left vertex."""
    for length in range(2, m + 1):
        for left in permutations(range(m), length):
            if left[0] != min(left):
                continue
            for right in permutations(range(m, 2 * m), length):
                yield [x for pair in zip(left, right) for x in pair]


def check_complete_bipartite(m: int, samples: int = 0, seed: int = DEFAULT_SEED) -> CheckResult:
    """Every cycle of K_{m,m} has winding 0 under every proper 3-coloring.

    ``samples`` = 0 enumerates all cycles; otherwise that many random cycles
    are checked against every coloring.
    """
    res = CheckResult(f"complete_bipartite_zero_m{m}")
    G = complete_bipartite(m, m)
    rng = random.Random(seed)
    cycles = all_cycles_bipartite(m) if not samples else (_random_cycle_bipartite(m, rng) for _ in range(samples))
    cycles = [OrientedCycle(c).check_in(G) for c in cycles]
    for f in proper_colorings(G, 3):
        for C in cycles:
            res.record(winding_number(f, C) == 0, {"coloring": f, "cycle": list(C.vertices)})
    return res


def check_mobius(max_n: int = 10) -> CheckResult:
    """On the Moebius ladder M_n, W of the rim C_n is congruent to n+2 mod 4."""
    from .quadrangulation import mobius_ladder
    res = CheckResult("mobius_rim")
    for n in range(4, max_n + 1, 2):
        M = mobius_ladder(n)
        rim = OrientedCycle([M.index(j) for j in range(1, n + 1)])
        for f in proper_colorings(M, 3):
            res.record((winding_number(f, rim) - n - 2) % 4 == 0, {"n": n, "coloring": f})
    return res


def run_suite(seed: int = DEFAULT_SEED, max_cycle: int = 10, max_ladder: int = 8,
              max_mobius: int = 10) -> list[CheckResult]:
    return [
        check_cycle_parity(max_cycle),
        check_reversal(min(max_cycle, 8)),
        check_four_cycles(),
        check_layer_equality(max_ladder),
        check_layer_equality(6, h=3),
        check_layer_equality_sampled(4, 10, samples=200, seed=seed),
        check_complete_bipartite(3),
        check_complete_bipartite(4, samples=60, seed=seed),
        check_mobius(max_mobius),
    ]
