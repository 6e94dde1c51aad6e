"""Command-line entry point.

Subcommands: construct, verify, analyze, solve, bounds, exhaustive.
Every run prints a self-contained report (plain text, or JSON with --json)
echoing the command, inputs, and outputs; artifact files use the formats
documented in core/graphs/hypergraph.

Exit codes: 0 ok, 1 verification failed, 2 budget expired before the proof,
64 usage error, 65 domain error, 66 parse error.  Randomized subcommands
require an explicit --seed.  --threads is accepted for compatibility; the
current implementation is sequential, so results never depend on it.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
import time

from . import __version__
from ._accel import BACKEND
from .bounds import alpha_star, gamma32, lemma2_rhs, new_upper, table1
from .constructions import (
    base_wellcovered,
    example1_wellcovered,
    example2_wellcovered,
    explicit_plan,
    fig4_left_dompair,
    fig4_right_dompair,
    graham_target,
    greedy_packing,
    k_plus,
    layered_plan,
    layered_wellcovered,
    small_graph,
    star_completed_dompair,
    steiner_triple_system,
)
from .core import ParseError, setfamily_to_text, read_setfamily
from .graphs import (
    certificate,
    is_minimal_dominating,
    matching_set_M,
    read_graph,
    write_graph,
)
from .hypergraph import (
    KGraph,
    cliques,
    dompair_from_wellcovered,
    e_minus_c,
    is_well_covered,
    read_dompair,
    verify_dominating,
    verify_independent,
    write_dompair,
)
from .core import elements_of
from .solver import enumerate_optimal_32, exhaustive_graphs_f, sample_optimal_32, solve

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64
EXIT_DOMAIN = 65
EXIT_PARSE = 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _report(command: str, inputs: dict, outputs: dict, started: float) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "timing_seconds": round(time.monotonic() - started, 6),
        "version": __version__,
    }


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    print(f"# {report['command']}  (domset {report['version']}, backend {BACKEND})")
    for key, value in report["inputs"].items():
        print(f"in  {key} = {value}")
    for key, value in report["outputs"].items():
        print(f"out {key} = {value}")
    print(f"time {report['timing_seconds']}s")


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _dompair_text(d) -> str:
    buf = io.StringIO()
    write_dompair(d, buf)
    return buf.getvalue()


def _graph_text(g) -> str:
    buf = io.StringIO()
    write_graph(g, buf)
    return buf.getvalue()


def _build_parser() -> _Parser:
    parser = _Parser(prog="domset", description=__doc__)
    parser.add_argument("--threads", type=int, default=None, help="accepted; sequential run")
    sub = parser.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("construct", help="build a documented object and write it")
    c.add_argument(
        "what",
        choices=[
            "kplus", "h5a", "h5b", "h9", "star", "sts", "packing", "base",
            "layered", "fig4-left", "fig4-right", "example1", "example2",
        ],
    )
    c.add_argument("--n", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--v", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--a", type=int)
    c.add_argument("--b", type=int)
    c.add_argument("--alpha", type=float)
    c.add_argument("--parts", type=str, help="explicit layer sizes, e.g. 19,7,4")
    c.add_argument("--packer", choices=["auto", "greedy"], default="auto")
    c.add_argument("--out", type=str, default=None)
    c.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="check a serialized object")
    v.add_argument("kind", choices=["dominating", "independent", "wellcovered", "minimal"])
    v.add_argument("path")
    v.add_argument("--json", action="store_true")

    a = sub.add_parser("analyze", help="full certificate of a graph file")
    a.add_argument("path")
    a.add_argument("--json", action="store_true")

    s = sub.add_parser("solve", help="exact gamma/i on G_{l,k}")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--mode", choices=["gamma", "i"], required=True)
    s.add_argument("--budget", type=float, default=None)
    s.add_argument("--warm", action="append", default=[])
    s.add_argument("--out", type=str, default=None)
    s.add_argument("--json", action="store_true")

    b = sub.add_parser("bounds", help="bound calculators")
    bsub = b.add_subparsers(dest="bcmd", required=True)
    bt = bsub.add_parser("table1")
    bt.add_argument("--tk", action="append", default=[], help="override, e.g. --tk 3=0.5936")
    bt.add_argument("--json", action="store_true")
    b3 = bsub.add_parser("theorem3")
    b3.add_argument("--k", type=int, required=True)
    b3.add_argument("--json", action="store_true")

    e = sub.add_parser("exhaustive", help="desk-scale exhaustive checks")
    esub = e.add_subparsers(dest="ecmd", required=True)
    em = esub.add_parser("maxf")
    em.add_argument("--n", type=int, required=True)
    em.add_argument("--json", action="store_true")
    ee = esub.add_parser("enumerate32")
    ee.add_argument("--n", type=int, required=True)
    ee.add_argument("--json", action="store_true")
    es = esub.add_parser("sample32")
    es.add_argument("--n", type=int, required=True)
    es.add_argument("--count", type=int, required=True)
    es.add_argument("--seed", type=int, default=None)
    es.add_argument("--json", action="store_true")
    return parser


def _require(args, names) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join(missing)}")


def _cmd_construct(args) -> int:
    started = time.monotonic()
    what = args.what
    inputs = {"what": what}
    outputs = {}
    artifact = None
    ext = None

    if what == "kplus":
        _require(args, ["n", "s"])
        inputs.update(n=args.n, s=args.s)
        g = k_plus(args.s, args.n)
        cert = certificate(g)
        outputs.update(
            edges=cert.edge_count,
            triangles=cert.triangle_count,
            uncovered=len(cert.uncovered_edges),
            f_times_2=cert.f_times_2,
        )
        artifact, ext = _graph_text(g), "g"
    elif what in ("h5a", "h5b", "h9"):
        g = small_graph(what)
        cert = certificate(g)
        outputs.update(
            n=g.n,
            edges=cert.edge_count,
            triangles=cert.triangle_count,
            f_times_2=cert.f_times_2,
        )
        artifact, ext = _graph_text(g), "g"
    elif what == "star":
        _require(args, ["n"])
        inputs.update(n=args.n)
        d = star_completed_dompair(args.n)
        outputs.update(size=d.size, lower=len(d.lower), upper=len(d.upper))
        artifact, ext = _dompair_text(d), "dp"
    elif what == "sts":
        _require(args, ["v"])
        inputs.update(v=args.v)
        fam = steiner_triple_system(args.v)
        outputs.update(triples=len(fam))
        artifact, ext = setfamily_to_text(fam), "sf"
    elif what == "packing":
        _require(args, ["m", "k"])
        inputs.update(m=args.m, k=args.k)
        fam = greedy_packing(args.m, args.k)
        outputs.update(size=len(fam), graham_target=graham_target(args.m, args.k))
        artifact, ext = setfamily_to_text(fam), "sf"
    elif what == "base":
        _require(args, ["a", "b", "k"])
        inputs.update(a=args.a, b=args.b, k=args.k, packer=args.packer)
        if args.packer == "auto":
            from .constructions import default_packer

            packing = default_packer(args.a, args.k)
        else:
            packing = greedy_packing(args.a, args.k)
        h = base_wellcovered(args.a, args.b, args.k, packing)
        outputs.update(
            edges=h.edge_count(), cliques=len(cliques(h)), e_minus_c=e_minus_c(h)
        )
        artifact, ext = setfamily_to_text(h.edges), "sf"
    elif what == "layered":
        _require(args, ["k"])
        inputs.update(k=args.k, alpha=args.alpha, parts=args.parts)
        if args.parts:
            sizes = [int(p) for p in args.parts.split(",")]
            plan = explicit_plan(sizes, args.k)
        else:
            _require(args, ["n", "alpha"])
            plan = layered_plan(args.n, args.k, args.alpha)
        h = layered_wellcovered(plan)
        d = dompair_from_wellcovered(h)
        outputs.update(
            parts=list(plan.sizes),
            edges=h.edge_count(),
            cliques=len(cliques(h)),
            dompair_size=d.size,
        )
        artifact, ext = _dompair_text(d), "dp"
    elif what in ("fig4-left", "fig4-right"):
        if args.n is not None and args.n != 9:
            raise ValueError("the figure witnesses are defined for n = 9 only")
        d = fig4_left_dompair() if what == "fig4-left" else fig4_right_dompair()
        outputs.update(size=d.size, lower=len(d.lower), upper=len(d.upper))
        artifact, ext = _dompair_text(d), "dp"
    elif what in ("example1", "example2"):
        h = example1_wellcovered() if what == "example1" else example2_wellcovered()
        d = dompair_from_wellcovered(h)
        outputs.update(
            edges=h.edge_count(),
            cliques=len(cliques(h)),
            size=d.size,
            lower=len(d.lower),
            upper=len(d.upper),
        )
        artifact, ext = _dompair_text(d), "dp"

    out_path = args.out or f"{what}.{ext}"
    _write_text(out_path, artifact)
    outputs["out"] = out_path
    _emit(_report(f"construct {what}", inputs, outputs, started), args.json)
    return EXIT_OK


def _cmd_verify(args) -> int:
    started = time.monotonic()
    inputs = {"kind": args.kind, "path": args.path}
    outputs = {}
    if args.kind in ("dominating", "independent", "minimal"):
        d = read_dompair(args.path)
        inputs.update(n=d.n, l=d.l, k=d.k, size=d.size)
        if args.kind == "dominating":
            ok, witness = verify_dominating(d)
            if witness is not None:
                outputs["witness"] = list(elements_of(witness))
        elif args.kind == "independent":
            ok, pair = verify_independent(d)
            if pair is not None:
                outputs["witness"] = [list(elements_of(pair[0])), list(elements_of(pair[1]))]
        else:
            dom_ok, witness = verify_dominating(d)
            if not dom_ok:
                ok = False
                outputs["witness"] = list(elements_of(witness))
                outputs["reason"] = "not dominating"
            else:
                ok = is_minimal_dominating(d)
    else:
        fam = read_setfamily(args.path)
        h = KGraph(fam.n, fam.k, fam)
        inputs.update(n=h.n, k=h.k, edges=h.edge_count())
        ok, witness = is_well_covered(h)
        if witness is not None:
            outputs["witness"] = list(elements_of(witness))
    outputs["pass"] = bool(ok)
    _emit(_report(f"verify {args.kind}", inputs, outputs, started), args.json)
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def _cmd_analyze(args) -> int:
    started = time.monotonic()
    g = read_graph(args.path)
    cert = certificate(g)
    bound = lemma2_rhs(g.n)
    outputs = cert.to_json_dict()
    outputs.update(
        f=cert.f_times_2 / 2,
        lemma2_bound=bound,
        meets_bound=cert.f_times_2 == 2 * bound,
        matching_set=[list(e) for e in matching_set_M(g)],
    )
    _emit(_report("analyze", {"path": args.path, "n": g.n}, outputs, started), args.json)
    return EXIT_OK


def _cmd_solve(args) -> int:
    started = time.monotonic()
    warm = [read_dompair(p) for p in args.warm]
    result = solve(
        args.n, args.l, args.k,
        mode=args.mode,
        budget_seconds=args.budget,
        warm_starts=warm,
    )
    outputs = {
        "size": result.size,
        "status": result.status,
        "lower_bound": result.lower_bound,
        "nodes_explored": result.nodes_explored,
    }
    if args.out:
        _write_text(args.out, _dompair_text(result.witness))
        outputs["out"] = args.out
    inputs = {
        "n": args.n, "l": args.l, "k": args.k, "mode": args.mode,
        "budget": args.budget, "warm": args.warm,
    }
    _emit(_report("solve", inputs, outputs, started), args.json)
    return EXIT_OK if result.status == "optimal" else EXIT_BUDGET


def _cmd_bounds(args) -> int:
    started = time.monotonic()
    if args.bcmd == "table1":
        overrides = {}
        for item in args.tk:
            try:
                key, value = item.split("=", 1)
                overrides[int(key)] = float(value)
            except ValueError:
                raise UsageError(f"bad --tk override {item!r}, expected K=VALUE") from None
        rows = table1(overrides or None)
        outputs = {
            "rows": [
                {**row.display(), "alpha_star": row.alpha_star,
                 "raw": {"lower": row.lower, "gerbner_upper": row.gerbner_upper,
                         "new_upper": row.new_upper}}
                for row in rows
            ],
            "note": "t_k defaults reverse-engineered from the printed lower column",
        }
        report = _report("bounds table1", {"tk_overrides": args.tk}, outputs, started)
        if args.json:
            _emit(report, True)
        else:
            print("k   t_k      lower   upper(prev)  upper(new)")
            for row in rows:
                d = row.display()
                print(
                    f"{row.k}   {row.turan_upper_tk:<7}  {d['lower']:.3f}   "
                    f"{d['gerbner_upper']:.3f}        {d['new_upper']:.3f}"
                )
            print(f"time {report['timing_seconds']}s")
        return EXIT_OK
    a = alpha_star(args.k)
    outputs = {"alpha_star": a, "new_upper": new_upper(args.k)}
    _emit(_report("bounds theorem3", {"k": args.k}, outputs, started), args.json)
    return EXIT_OK


def _cmd_exhaustive(args) -> int:
    started = time.monotonic()
    if args.ecmd == "maxf":
        best2f, reps = exhaustive_graphs_f(args.n)
        outputs = {
            "max_f_times_2": best2f,
            "lemma2_bound_times_2": 2 * lemma2_rhs(args.n),
            "maximizer_classes": len(reps),
            "class_edge_counts": [g.edge_count() for g in reps],
        }
        _emit(_report("exhaustive maxf", {"n": args.n}, outputs, started), args.json)
        return EXIT_OK
    if args.ecmd == "enumerate32":
        pairs = enumerate_optimal_32(args.n)
        outputs = {
            "count": len(pairs),
            "size": pairs[0].size if pairs else None,
            "gamma32": gamma32(args.n),
        }
        if args.n < 5:
            outputs["gamma32_note"] = "extrapolated below the proven range n >= 5"
        _emit(_report("exhaustive enumerate32", {"n": args.n}, outputs, started), args.json)
        return EXIT_OK
    if args.seed is None:
        raise UsageError("sample32 is randomized: --seed is required")
    pairs = sample_optimal_32(args.n, args.count, args.seed)
    outputs = {"distinct": len(pairs), "size": gamma32(args.n)}
    if args.n < 5:
        outputs["gamma32_note"] = "extrapolated below the proven range n >= 5"
    inputs = {"n": args.n, "count": args.count, "seed": args.seed}
    _emit(_report("exhaustive sample32", inputs, outputs, started), args.json)
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.cmd == "construct":
            return _cmd_construct(args)
        if args.cmd == "verify":
            return _cmd_verify(args)
        if args.cmd == "analyze":
            return _cmd_analyze(args)
        if args.cmd == "solve":
            return _cmd_solve(args)
        if args.cmd == "bounds":
            return _cmd_bounds(args)
        return _cmd_exhaustive(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
