"""Run every CLI verification suite over a parameter grid and summarize.

    python scripts/verify_all.py --max-k 6 --output report.json

Each suite runs in-process through the CLI entry point; the combined
report records every invocation with its exit code.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
import time
from dataclasses import asdict, dataclass

from sgdrums.cli import main as cli_main


@dataclass
class GridConfig:
    max_k: int = 6
    max_h: int = 6
    max_n: int = 12
    critical_instances: tuple = ((6, 2), (8, 3), (10, 4), (7, 2), (8, 2), (9, 2))
    seed: int = 20240601


def invocations(cfg: GridConfig):
    for k in range(1, min(cfg.max_k, 8) + 1):
        yield ["verify", "iso", "--k", str(k)]
    for h in range(2, cfg.max_h + 1):
        for n in range(4, cfg.max_n + 1, 2):
            yield ["verify", "chromatic", "--family", "reduced_drum", "--h", str(h), "--n", str(n)]
    yield ["verify", "winding", "--seed", str(cfg.seed)]
    for n, k in cfg.critical_instances:
        yield ["verify", "critical", "--n", str(n), "--k", str(k)]
    for k in range(2, cfg.max_k + 1):
        yield ["verify", "quad", "--family", "Y", "--k", str(k)]
        yield ["verify", "quad", "--family", "Z", "--k", str(k)]
    for k in range(3, cfg.max_k + 1):
        yield ["verify", "quad", "--family", "U", "--k", str(k)]
    yield ["verify", "quad", "--family", "Q"]


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-k", type=int, default=GridConfig.max_k)
    p.add_argument("--output", help="write the combined JSON report here")
    args = p.parse_args(argv)
    cfg = GridConfig(max_k=args.max_k)
    runs, worst = [], 0
    for argv_i in invocations(cfg):
        out, err = io.StringIO(), io.StringIO()
        t = time.time()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = cli_main(argv_i)
        worst = max(worst, code)
        runs.append({"argv": argv_i, "exit": code, "seconds": round(time.time() - t, 2),
                     "summary": err.getvalue().strip()})
        print(f"[{code}] {' '.join(argv_i)}: {err.getvalue().strip()}", file=sys.stderr)
    report = {"config": asdict(cfg), "runs": runs,
              "failed": [r["argv"] for r in runs if r["exit"] != 0]}
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(report, fh, indent=1)
    print(f"{len(runs)} invocations, {len(report['failed'])} not passing", file=sys.stderr)
    return worst


if __name__ == "__main__":
    sys.exit(main())
