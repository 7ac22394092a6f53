"""Command-line interface: ``python -m sgdrums <command> ...``.

JSON reports go to stdout and a one-line summary to stderr.  Exit codes:
0 all checks passed, 1 some check failed, 2 usage or parameter error,
3 a solver call ran out of time.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import import_module

from . import coloring as col
from . import criticality as crit
from . import quadrangulation as quad
from . import winding
from .graph import (Graph, is_double_cover, is_spanning_subgraph,
                    label_to_json, verify_isomorphism)
from .solver import DEFAULT_TIMEOUT, SolverTimeout, chromatic_number, exists_q_coloring

# the package namespace re-exports functions named like these modules
drum = import_module(".drum", __package__)
sch = import_module(".schrijver", __package__)

FAMILIES = ("kneser", "schrijver", "drum", "reduced_drum", "mobius", "L", "U", "X", "Y", "Z", "Q")

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- reports -----------------------------------------------------------------------

@dataclass
class VerificationReport:
    command: list
    parameters: dict
    checks: list = field(default_factory=list)

    def add(self, name: str, ok, evidence=None):
        status = ok if isinstance(ok, str) else ("pass" if ok else "fail")
        self.checks.append({"name": name, "status": status, "evidence": evidence})
        return status == "pass"

    @property
    def status(self) -> str:
        if any(c["status"] == "timeout" for c in self.checks):
            return "timeout"
        return "pass" if all(c["status"] == "pass" for c in self.checks) else "fail"

    def to_json_dict(self) -> dict:
        return {"command": self.command, "parameters": self.parameters,
                "status": self.status, "checks": self.checks}

    def exit_code(self) -> int:
        return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "timeout": EXIT_TIMEOUT}[self.status]


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=1, sort_keys=False, default=_json_default)
    sys.stdout.write("\n")


def _json_default(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, tuple):
        return list(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _summary(msg: str) -> None:
    print(msg, file=sys.stderr)


def _finish(report: VerificationReport) -> int:
    _emit(report.to_json_dict())
    failed = [c["name"] for c in report.checks if c["status"] != "pass"]
    _summary(f"{report.status}: {len(report.checks) - len(failed)}/{len(report.checks)} checks passed"
             + (f"; failing: {', '.join(failed)}" if failed else ""))
    return report.exit_code()


# -- family construction -------------------------------------------------------

def _need(args, *names):
    missing = [x for x in names if getattr(args, x, None) is None]
    if missing:
        raise UsageError(f"{args.family or args.command} needs --{' --'.join(missing)}")
    return [getattr(args, x) for x in names]


def build_family(args) -> Graph:
    fam = args.family
    if fam == "kneser":
        return sch.kneser(*_need(args, "n", "k"))
    if fam == "schrijver":
        return sch.schrijver(*_need(args, "n", "k"))
    if fam == "drum":
        return drum.drum(*_need(args, "h", "n"))
    if fam == "reduced_drum":
        return drum.reduced_drum(*_need(args, "h", "n"))
    if fam == "mobius":
        return quad.mobius_ladder(*_need(args, "n"))
    if fam == "L":
        return quad.ell(*_need(args, "k"))
    if fam == "U":
        return quad.u_graph(*_need(args, "k"))
    if fam == "X":
        return quad.x_graph(*_need(args, "h", "n"))
    if fam == "Y":
        return quad.y_graph(*_need(args, "k"))
    if fam == "Z":
        return quad.z_graph(*_need(args, "k"))
    if fam == "Q":
        return quad.q_graph()
    raise UsageError(f"unknown family {fam!r}")


def _params(args) -> dict:
    return {x: getattr(args, x) for x in ("n", "k", "h") if getattr(args, x, None) is not None}


def _coloring_json(G: Graph, c) -> dict:
    return {"colors": {str(i): x for i, x in enumerate(c)},
            "vertices": [label_to_json(v) for v in G.labels]}


def _add_family_args(p, positional=True):
    if positional:
        p.add_argument("family", choices=FAMILIES)
    else:
        p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--h", type=int)


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers") from None


# -- commands ------------------------------------------------------------------------

def cmd_generate(args) -> int:
    G = build_family(args)
    if args.format == "dot":
        sys.stdout.write(G.to_dot())
    else:
        _emit(G.to_json_dict())
    _summary(f"{G.family or args.family}: {len(G)} vertices, {G.num_edges()} edges")
    return EXIT_PASS


def cmd_export(args) -> int:
    G = build_family(args)
    text = G.to_dot() if args.format == "dot" else json.dumps(G.to_json_dict(), indent=1) + "\n"
    with open(args.output, "w") as fh:
        fh.write(text)
    _summary(f"wrote {len(G)} vertices, {G.num_edges()} edges to {args.output}")
    return EXIT_PASS


def cmd_chromatic(args) -> int:
    G = build_family(args)
    chi = chromatic_number(G, args.timeout_secs)
    c = exists_q_coloring(G, chi, args.timeout_secs)
    _emit({"family": args.family, "parameters": _params(args), "chromatic_number": chi,
           "coloring": _coloring_json(G, c)})
    _summary(f"chi = {chi}")
    return EXIT_PASS


def _schrijver_edge(args, n, k):
    if not args.edge:
        raise UsageError("--edge V:W is required, e.g. --edge 1,3:2,5")
    try:
        V, W = (tuple(sorted(_parse_ints(part, "--edge"))) for part in args.edge.split(":"))
    except ValueError:
        raise UsageError("--edge must look like 1,3:2,5") from None
    return V, W


def cmd_color_construct(args) -> int:
    kind = args.construction
    if kind in ("two", "four"):
        h, n = _need(args, "h", "n")
        G = drum.reduced_drum(h, n)
        c = col.two_coloring_reduced_drum(h, n) if kind == "two" else col.four_coloring_reduced_drum(h, n)
        target = None
    elif kind in ("basic", "regular", "sg-n2"):
        n, k = _need(args, "n", "k")
        G = sch.schrijver(n, k)
        V, W = _schrijver_edge(args, n, k)
        if kind == "basic":
            c = col.basic_coloring(n, k, V, W)
        elif kind == "regular":
            c = col.regular_edge_coloring(n, k, V, W)
        else:
            if k != 2:
                raise UsageError("sg-n2 needs --k 2")
            c = col.sg_n2_edge_coloring(n, V, W)
        target = (V, W)
    else:
        (k,) = _need(args, "k")
        if not args.edge:
            raise UsageError("--edge a,b (bottom-layer positions of an extra edge) is required")
        a, b = _parse_ints(args.edge, "--edge")
        if kind == "uk":
            G = quad.u_graph(k).remove_label_edges([((1, a), (1, b))])
            c = col.uk_minus_edge_coloring(k, (a, b))
        else:
            G = quad.y_graph(k).remove_label_edges([((1, a), (1, b))])
            c = col.yk_minus_edge_coloring(k, (a, b))
        target = None
    mono = [[label_to_json(G.labels[i]), label_to_json(G.labels[j])] for i, j in col.monochromatic_edges(G, c)]
    out = {"construction": kind, "parameters": _params(args), "num_colors": col.num_colors(c),
           "monochromatic_edges": mono, "coloring": _coloring_json(G, c)}
    if target is not None:
        out["target_edge"] = [list(target[0]), list(target[1])]
    _emit(out)
    _summary(f"{kind}: {col.num_colors(c)} colors, {len(mono)} monochromatic edge(s)")
    return EXIT_PASS


def cmd_winding(args) -> int:
    cyc = _parse_ints(args.cycle, "--cycle")
    try:
        raw = json.loads(args.coloring)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--coloring is not valid JSON: {exc}") from None
    raw = raw.get("colors", raw) if isinstance(raw, dict) else raw
    f = {int(k): int(v) for k, v in raw.items()} if isinstance(raw, dict) else dict(enumerate(raw))
    missing = [v for v in cyc if v not in f]
    if missing:
        raise UsageError(f"coloring has no color for vertices {missing}")
    if any(x not in (0, 1, 2) for x in f.values()):
        raise UsageError("colors must be 0, 1 or 2")
    C = winding.OrientedCycle(cyc)
    if args.family:
        C.check_in(build_family(args))
    try:
        w = winding.winding_number(f, C)
    except winding.MonochromaticEdge as exc:
        _emit({"cycle": cyc, "error": str(exc)})
        _summary(str(exc))
        return EXIT_FAIL
    _emit({"cycle": cyc, "weights": [winding.edge_weight(f, a, b) for a, b in C.oriented_edges()],
           "winding_number": w, "absolute": abs(w)})
    _summary(f"W = {w}")
    return EXIT_PASS


def _verdict_rows(report: crit.CompareReport, mode: str):
    rows = []
    for v in report.verdicts:
        d = v.to_json_dict()
        if mode == "predict":
            d.pop("brute"), d.pop("timed_out"), d.pop("mismatch")
        rows.append(d)
    return rows


def cmd_critical(args) -> int:
    n, k = args.n, args.k
    mode = "brute" if args.brute else "compare" if args.compare else "predict" if args.predict else "compare"
    G = sch.schrijver(n, k)
    if args.edge:
        i, j = _parse_ints(args.edge, "--edge")
        if not (0 <= i < len(G) and 0 <= j < len(G)) or not G.has_edge(i, j):
            raise UsageError(f"{args.edge} is not an edge (vertex indices into the generate order)")
        edges = [tuple(sorted((i, j)))]
    else:
        edges = G.edges()
    verdicts = [crit.predict_schrijver_edge(n, k, (G.labels[a], G.labels[b])) for a, b in edges]
    chi = None
    if mode != "predict":
        chi = chromatic_number(G, args.timeout_secs)
        for v, r in zip(verdicts, crit.critical_edges(G, edges, args.workers, args.timeout_secs)):
            v.brute, v.timed_out = r, r is None
    rep = crit.CompareReport(n, k, chi or 0, verdicts)
    rows = _verdict_rows(rep, mode)
    _emit(rows)
    mism = len(rep.mismatches) if mode == "compare" else 0
    _summary(f"SG({n},{k}): {len(rows)} edge(s), mode {mode}, counts {rep.counts()}, mismatches {mism}")
    if mism:
        return EXIT_FAIL
    return EXIT_TIMEOUT if rep.timeouts else EXIT_PASS


def _census_checks(rep: VerificationReport, emb, surface_chi: int):
    census = quad.face_census(emb)
    rep.add("all_faces_length_4", census["face_lengths"] == {4: census["F"]}, census)
    rep.add("euler_characteristic", census["euler_characteristic"] == surface_chi,
            {"expected": surface_chi, "got": census["euler_characteristic"]})
    rep.add("nonorientable", not census["orientable"])
    return census


def _quad_report(args, rep: VerificationReport) -> None:
    fam = args.family
    if fam in ("Y", "Z"):
        (k,) = _need(args, "k")
        emb = _family_embedding(args)
        _census_checks(rep, emb, 0 if fam == "Y" else 1)
        lm = drum.sg_label_map(k)
        rep.add("spanning_subgraph_of_schrijver",
                is_spanning_subgraph(emb.graph, sch.schrijver(2 * k + 2, k), lm.__getitem__))
    elif fam == "X":
        emb = _family_embedding(args)
        _census_checks(rep, emb, 0)
        rep.add("four_regular", set(emb.graph.degrees()) == {4})
    elif fam == "Q":
        emb = quad.embed_q()
        census = quad.face_census(emb)
        rep.add("euler_characteristic", census["euler_characteristic"] == 0, census)
        rep.add("chromatic_number_4", chromatic_number(emb.graph, args.timeout_secs) == 4)
    elif fam == "U":
        (k,) = _need(args, "k")
        U = quad.u_graph(k)
        for a, b in quad.extra_edges(k):
            try:
                col.uk_minus_edge_coloring(k, (a, b))
                rep.add(f"three_coloring_without_({a},{b})", True)
            except col.NoColoringExists:
                H = U.remove_label_edges([((1, a), (1, b))])
                rep.add(f"no_three_coloring_without_({a},{b})",
                        exists_q_coloring(H, 3, args.timeout_secs) is None)
        return
    else:
        raise UsageError(f"no quadrangulation checks for family {fam}")
    if args.emit_embedding:
        rep.checks[0]["evidence"] = dict(rep.checks[0]["evidence"] or {}, embedding=emb.to_json_dict())


def cmd_quad(args) -> int:
    if args.verify:
        rep = VerificationReport(sys.argv[1:], dict(_params(args), family=args.family))
        _quad_report(args, rep)
        return _finish(rep)
    emb = _family_embedding(args)
    census = quad.face_census(emb)
    out = {"family": args.family, "parameters": _params(args), "census": census}
    if args.emit_embedding:
        out["embedding"] = emb.to_json_dict()
    _emit(out)
    _summary(f"V={census['V']} E={census['E']} F={census['F']} "
             f"chi={census['euler_characteristic']} orientable={census['orientable']} "
             f"faces={census['face_lengths']}")
    return EXIT_PASS


def _family_embedding(args):
    fam = args.family
    if fam == "Y":
        return quad.embed_y(*_need(args, "k"))
    if fam == "Z":
        return quad.embed_z(*_need(args, "k"))
    if fam == "X":
        return quad.embed_x(*_need(args, "h", "n"))
    if fam == "Q":
        return quad.embed_q()
    raise UsageError(f"family {fam} has no embedding; use --verify for its checks")


def _verify_iso(args, rep):
    (k,) = _need(args, "k")
    n = 2 * k + 2
    rep.add("half_drum_construction", verify_isomorphism(drum.half_drum_map(k + 1, n)))
    if k >= 2:
        cover = drum.sg_cover_map(k)
        fibers_ok = all(len(f) == 2 and cover.domain.labels[f[1]] == drum.opposite(cover.domain.labels[f[0]], k + 1, n)
                        for f in cover.fibers())
        rep.add("double_cover", is_double_cover(cover))
        rep.add("fibers_are_opposite_pairs", fibers_ok)
    m = drum.sg_isomorphism(k)
    rep.add("isomorphism", verify_isomorphism(m),
            {"map": [[label_to_json(m.domain.labels[i]), label_to_json(m.codomain.labels[j])]
                     for i, j in enumerate(m.images)]})


def _expected_chi(G: Graph, fam: str, p: dict):
    if fam in ("kneser", "schrijver"):
        return p["n"] - 2 * p["k"] + 2
    if fam == "reduced_drum":
        return 2 if (p["h"] + p["n"] // 2) % 2 else 4
    if fam in ("X", "Y", "Z", "Q"):
        return 4
    if fam == "mobius":
        return 4 if p["n"] == 4 else (3 if p["n"] % 4 == 0 else 2)
    if fam == "L":
        return 2
    return None


def _verify_chromatic(args, rep):
    G = build_family(args)
    p = _params(args)
    chi = chromatic_number(G, args.timeout_secs)
    expected = _expected_chi(G, args.family, p)
    rep.add("chromatic_number", expected is None or chi == expected, {"chi": chi, "expected": expected})
    c = exists_q_coloring(G, chi, args.timeout_secs)
    rep.add("witness_coloring_proper", col.is_proper(G, c), _coloring_json(G, c))
    if chi > 1:
        rep.add("no_smaller_coloring", exists_q_coloring(G, chi - 1, args.timeout_secs) is None)
    if args.family == "reduced_drum":
        h, n = p["h"], p["n"]
        c2 = col.two_coloring_reduced_drum(h, n) if (h + n // 2) % 2 else col.four_coloring_reduced_drum(h, n)
        rep.add("constructive_coloring_proper", col.is_proper(G, c2), {"num_colors": col.num_colors(c2)})


def _verify_winding(args, rep):
    for r in winding.run_suite(seed=args.seed):
        rep.add(r.name, r.ok, {"cases": r.cases, "violations": r.violations, "example": r.example})


def _verify_critical(args, rep):
    n, k = _need(args, "n", "k")
    r = crit.compare_all(n, k, args.workers, args.timeout_secs)
    status = "timeout" if r.timeouts else (not r.mismatches)
    rep.add("prediction_matches_oracle", status,
            {"chi": r.chi, "edges": len(r.verdicts), "counts": r.counts(),
             "mismatches": [v.to_json_dict() for v in r.mismatches]})


def cmd_verify(args) -> int:
    rep = VerificationReport(sys.argv[1:], dict(_params(args), suite=args.suite, seed=args.seed))
    if args.suite == "iso":
        _verify_iso(args, rep)
    elif args.suite == "chromatic":
        if not args.family:
            raise UsageError("verify chromatic needs --family")
        _verify_chromatic(args, rep)
    elif args.suite == "winding":
        _verify_winding(args, rep)
    elif args.suite == "critical":
        _verify_critical(args, rep)
    else:
        if not args.family:
            raise UsageError("verify quad needs --family")
        _quad_report(args, rep)
    return _finish(rep)


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=winding.DEFAULT_SEED,
                        help="seed for randomized checks")
    common.add_argument("--timeout-secs", type=float, default=DEFAULT_TIMEOUT,
                        help="time limit per solver call in seconds (0 = none; default from SGDRUMS_TIMEOUT)")
    common.add_argument("--workers", type=int, default=1, help="processes for per-edge sweeps")

    p = argparse.ArgumentParser(prog="sgdrums", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="print a graph as JSON or DOT")
    _add_family_args(g)
    g.add_argument("--format", choices=("json", "dot"), default="json")
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("export", parents=[common], help="write a graph to a file")
    _add_family_args(e)
    e.add_argument("--format", choices=("json", "dot"), default="json")
    e.add_argument("--output", required=True)
    e.set_defaults(func=cmd_export)

    c = sub.add_parser("chromatic", parents=[common], help="exact chromatic number with a witness")
    _add_family_args(c)
    c.set_defaults(func=cmd_chromatic)

    cc = sub.add_parser("color-construct", parents=[common], help="run an explicit coloring construction")
    cc.add_argument("construction", choices=("two", "four", "basic", "regular", "sg-n2", "uk", "yk"))
    cc.add_argument("--n", type=int)
    cc.add_argument("--k", type=int)
    cc.add_argument("--h", type=int)
    cc.add_argument("--edge", help="V:W subsets such as 1,3:2,5, or a,b positions for uk/yk")
    cc.set_defaults(func=cmd_color_construct, family=None)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=("iso", "chromatic", "winding", "critical", "quad"))
    v.add_argument("--family", choices=FAMILIES)
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--h", type=int)
    v.add_argument("--emit-embedding", action="store_true")
    v.set_defaults(func=cmd_verify)

    cr = sub.add_parser("critical", parents=[common], help="edge criticality in SG(n,k)")
    cr.add_argument("--n", type=int, required=True)
    cr.add_argument("--k", type=int, required=True)
    which = cr.add_mutually_exclusive_group()
    which.add_argument("--edge", help="vertex indices a,b in generate order")
    which.add_argument("--all", action="store_true", help="every edge (default)")
    mode = cr.add_mutually_exclusive_group()
    mode.add_argument("--predict", action="store_true")
    mode.add_argument("--brute", action="store_true")
    mode.add_argument("--compare", action="store_true")
    cr.set_defaults(func=cmd_critical)

    w = sub.add_parser("winding", parents=[common], help="winding number of a 3-coloring along a cycle")
    w.add_argument("--cycle", required=True, help="comma-separated vertex indices")
    w.add_argument("--coloring", required=True, help='JSON map such as {"0": 0, "1": 1, "2": 2}')
    w.add_argument("--family", choices=FAMILIES, help="host graph for checking the cycle's edges")
    w.add_argument("--n", type=int)
    w.add_argument("--k", type=int)
    w.add_argument("--h", type=int)
    w.set_defaults(func=cmd_winding)

    q = sub.add_parser("quad", parents=[common], help="surface embedding checks")
    q.add_argument("--family", choices=("Y", "Z", "X", "U", "Q"), required=True)
    q.add_argument("--n", type=int)
    q.add_argument("--k", type=int)
    q.add_argument("--h", type=int)
    q.add_argument("--verify", action="store_true", help="run pass/fail checks instead of printing the census")
    q.add_argument("--emit-embedding", action="store_true")
    q.set_defaults(func=cmd_quad)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        _summary(f"error: {exc}")
        return EXIT_USAGE
    except SolverTimeout as exc:
        _summary(f"timeout: {exc}")
        return EXIT_TIMEOUT
