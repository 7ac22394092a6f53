"""Edge criticality: an exact oracle, rule-based predictions for Schrijver
graphs, and sweeps comparing the two.

An edge e of G is critical when chi(G - e) < chi(G).  The oracle computes
chi(G) once and then asks, per edge, whether G - e has a proper
(chi - 1)-coloring.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .coloring import basic_coloring_is_unique
from .drum import reduced_drum
from .graph import Graph, InvalidParameter, label_to_json
from .schrijver import is_interlacing, is_regular, schrijver, vertex_length, wrap
from .solver import SolverTimeout, chromatic_number, exists_q_coloring

CRITICAL, NONCRITICAL, UNKNOWN = "Critical", "NonCritical", "Unknown"


@dataclass
class EdgeVerdict:
    edge: tuple
    interlacing: bool
    endpoint_regular: tuple
    predicted: str
    prediction_source: str
    brute: bool | None = None
    timed_out: bool = False

    @property
    def mismatch(self) -> bool:
        if self.brute is None or self.predicted == UNKNOWN:
            return False
        return self.brute != (self.predicted == CRITICAL)

    def to_json_dict(self) -> dict:
        d = asdict(self)
        d["edge"] = [label_to_json(x) for x in self.edge]
        d["endpoint_regular"] = list(self.endpoint_regular)
        d["mismatch"] = self.mismatch
        return d


# -- oracle ----------------------------------------------------------------------

def is_critical_brute(G: Graph, e, chi: int | None = None, timeout: float | None = None) -> bool:
    """Exact criticality of the edge e = (a, b) given by vertex indices."""
    a, b = e
    if not G.has_edge(a, b):
        raise InvalidParameter(f"{G.labels[a]!r}-{G.labels[b]!r} is not an edge")
    if chi is None:
        chi = chromatic_number(G, timeout)
    if chi <= 1:
        return False
    H = G.remove_edges([(a, b)])
    return exists_q_coloring(H, chi - 1, timeout) is not None


def _brute_task(args):
    G, e, chi, timeout = args
    try:
        return is_critical_brute(G, e, chi, timeout)
    except SolverTimeout:
        return None


def default_workers() -> int:
    return max(1, min(8, os.cpu_count() or 1))


def critical_edges(G: Graph, edges=None, workers: int = 1, timeout: float | None = None,
                   chi: int | None = None) -> list:
    """Brute criticality per edge (index pairs, default all edges in sorted order).

    Entries are True/False, or None if that edge's query timed out.  The
    result order matches ``edges`` regardless of ``workers``.  A known
    chromatic number may be passed as ``chi`` to skip computing it.
    """
    edges = list(G.edges()) if edges is None else list(edges)
    if chi is None:
        chi = chromatic_number(G, timeout)
    tasks = [(G, e, chi, timeout) for e in edges]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(workers) as ex:
            return list(ex.map(_brute_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    return [_brute_task(t) for t in tasks]


# -- predictions for Schrijver graphs ----------------------------------------------

def k2_length_condition(X, Y, n: int) -> bool:
    return is_interlacing(X, Y, n) and min(vertex_length(X, n), vertex_length(Y, n)) <= 3


def predict_schrijver_edge(n: int, k: int, e) -> EdgeVerdict:
    """Rule-based criticality prediction for an edge (V, W) of SG(n, k), given by labels.

    Rules, first match wins: non-interlacing edges are not critical;
    edges between two regular vertices are critical; for n = 2k+2 exactly
    the interlacing edges are critical; for k = 2 an interlacing edge is
    critical iff one endpoint has length at most 3; an edge whose union
    V u W spans a path of C_n is critical (its basic coloring has it as
    the only monochromatic edge).  Everything else is Unknown.
    """
    V, W = (tuple(sorted(x)) for x in e)
    if set(V) & set(W) or len(V) != k or len(W) != k:
        raise InvalidParameter(f"{V}-{W} is not an edge of SG({n},{k})")
    inter = is_interlacing(V, W, n)
    reg = (is_regular(V, n), is_regular(W, n))

    def verdict(pred, src):
        return EdgeVerdict((V, W), inter, reg, pred, src)

    if not inter:
        return verdict(NONCRITICAL, "non_interlacing")
    if all(reg):
        return verdict(CRITICAL, "regular_endpoints")
    if n == 2 * k + 2:
        return verdict(CRITICAL, "interlacing_at_n_eq_2k_plus_2")
    if k == 2:
        if k2_length_condition(V, W, n):
            return verdict(CRITICAL, "k2_short_endpoint")
        return verdict(NONCRITICAL, "k2_both_endpoints_long")
    if basic_coloring_is_unique(n, V, W):
        return verdict(CRITICAL, "union_spans_path")
    return verdict(UNKNOWN, "open")


@dataclass
class CompareReport:
    n: int
    k: int
    chi: int
    verdicts: list = field(default_factory=list)

    @property
    def mismatches(self) -> list:
        return [v for v in self.verdicts if v.mismatch]

    @property
    def timeouts(self) -> list:
        return [v for v in self.verdicts if v.timed_out]

    def counts(self) -> dict:
        out = {}
        for v in self.verdicts:
            key = f"{v.predicted}/{'?' if v.brute is None else ('critical' if v.brute else 'noncritical')}"
            out[key] = out.get(key, 0) + 1
        return dict(sorted(out.items()))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "chi": self.chi, "edges": len(self.verdicts),
                "mismatches": len(self.mismatches), "timeouts": len(self.timeouts),
                "counts": self.counts(),
                "verdicts": [v.to_json_dict() for v in self.verdicts]}


def compare_all(n: int, k: int, workers: int = 1, timeout: float | None = None,
                brute: bool = True) -> CompareReport:
    """Prediction (and, if ``brute``, the oracle) for every edge of SG(n, k)."""
    G = schrijver(n, k)
    edges = G.edges()
    verdicts = [predict_schrijver_edge(n, k, (G.labels[a], G.labels[b])) for a, b in edges]
    chi = 0
    if brute:
        chi = chromatic_number(G, timeout)
        for v, r in zip(verdicts, critical_edges(G, edges, workers, timeout)):
            v.brute = r
            v.timed_out = r is None
    return CompareReport(n, k, chi, verdicts)


# -- structured families -------------------------------------------------------

def classify_reduced_drum_edges(k: int) -> dict:
    """Predicted split of the edges of reduced_drum(k+1, 2k+2) into critical and not.

    The non-critical edges are the bottom-layer chords (1,i)(1,j) that are
    not edges of the cycle C_{2k+2}; everything else is critical.
    """
    if k < 1:
        raise InvalidParameter("k >= 1 required")
    n = 2 * k + 2
    R = reduced_drum(k + 1, n)
    crit, non = [], []
    for a, b in R.label_edges():
        if (a[0] == b[0] == 1 and (b[1] - a[1]) % 2
                and wrap(a[1] + 1, n) != b[1] and wrap(b[1] + 1, n) != a[1]):
            non.append((a, b))
        else:
            crit.append((a, b))
    return {"critical": crit, "noncritical": non}


def noninterlacing_star_removed(n: int, k: int, vertex) -> Graph:
    """SG(n, k) minus every non-interlacing edge at one vertex."""
    G = schrijver(n, k)
    v = tuple(vertex)
    gone = [(v, G.labels[w]) for w in G.adj[G.index(v)]
            if not is_interlacing(v, G.labels[w], n)]
    return G.remove_label_edges(gone)


def check_noninterlacing_star(n: int, k: int, timeout: float | None = None) -> dict:
    """chi after removing the non-interlacing star, for every vertex of SG(n, k)."""
    G = schrijver(n, k)
    target = n - 2 * k + 2
    out = {}
    for v in G.labels:
        out[v] = chromatic_number(noninterlacing_star_removed(n, k, v), timeout)
    return {"target": target, "chi": out, "ok": all(c == target for c in out.values())}
