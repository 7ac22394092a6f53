"""Brute-force the edges of SG(n, k) whose criticality no rule predicts.

Each instance is swept with a per-edge time limit; the report lists how
many such edges turned out critical, non-critical, or timed out.  This
only gathers evidence: predictions are never updated from it.

    python scripts/open_regime_sweep.py --instances 9,3 11,4 12,5 --timeout 30
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from sgdrums.criticality import UNKNOWN, critical_edges, predict_schrijver_edge
from sgdrums.schrijver import schrijver
from sgdrums.solver import chromatic_number


@dataclass
class SweepConfig:
    instances: list = field(default_factory=lambda: [(9, 3), (11, 4), (12, 5)])
    timeout: float = 30.0
    workers: int = 1
    max_edges: int = 0  # 0 = all open edges
    known_chi: bool = True


def sweep(n: int, k: int, cfg: SweepConfig) -> dict:
    start = time.time()
    G = schrijver(n, k)
    open_edges, sources = [], {}
    for a, b in G.edges():
        v = predict_schrijver_edge(n, k, (G.labels[a], G.labels[b]))
        sources[v.prediction_source] = sources.get(v.prediction_source, 0) + 1
        if v.predicted == UNKNOWN:
            open_edges.append((a, b))
    if cfg.max_edges:
        open_edges = open_edges[:cfg.max_edges]
    # chi(SG(n,k)) = n-2k+2 is classical; computing it is the slow part for larger n
    chi = n - 2 * k + 2 if cfg.known_chi else chromatic_number(G, cfg.timeout)
    results = critical_edges(G, open_edges, cfg.workers, cfg.timeout, chi) if open_edges else []
    noncritical = [[list(G.labels[a]), list(G.labels[b])] for (a, b), r in zip(open_edges, results) if r is False]
    return {"n": n, "k": k, "vertices": len(G), "edges": G.num_edges(), "chi": chi,
            "rule_sources": dict(sorted(sources.items())), "open_edges_checked": len(open_edges),
            "critical": sum(r is True for r in results), "noncritical": noncritical,
            "timeouts": sum(r is None for r in results), "seconds": round(time.time() - start, 1)}


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--instances", nargs="+", default=None, help="n,k pairs")
    p.add_argument("--timeout", type=float, default=SweepConfig.timeout)
    p.add_argument("--workers", type=int, default=SweepConfig.workers)
    p.add_argument("--max-edges", type=int, default=SweepConfig.max_edges)
    p.add_argument("--compute-chi", action="store_true", help="solve for chi instead of using n-2k+2")
    args = p.parse_args(argv)
    cfg = SweepConfig(timeout=args.timeout, workers=args.workers, max_edges=args.max_edges,
                      known_chi=not args.compute_chi)
    if args.instances:
        cfg.instances = [tuple(int(x) for x in s.split(",")) for s in args.instances]
    report = {"config": asdict(cfg), "instances": []}
    for n, k in cfg.instances:
        row = sweep(n, k, cfg)
        report["instances"].append(row)
        print(f"SG({n},{k}): {row['open_edges_checked']} open edges, {row['critical']} critical, "
              f"{len(row['noncritical'])} non-critical, {row['timeouts']} timeouts, {row['seconds']}s",
              file=sys.stderr)
    json.dump(report, sys.stdout, indent=1)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
