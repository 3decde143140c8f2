"""Command-line surface: construct, verify, search, table.

Exit codes: 0 success, 2 parameter error, 3 verification failure,
4 resource exhaustion.  Machine-readable output (graph JSON, DOT, CSV) goes
to --output or stdout; human-readable summaries and timing go to stderr, so
identical requests produce byte-identical output files.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .bounds import bounds_table
from .cache import append as cache_append
from .cache import lookup as cache_lookup
from .constructions import (alpha_base, alpha_blowup, alpha_from_beta2,
                            best_beta2_witness, beta2_combine,
                            beta2_small_witness, beta_inductive_step,
                            BetaWitness, cycle_power_witness,
                            disjoint_cliques_witness, sat_source, sat_witness)
from .errors import (InputError, PartsatError, ResourceExhaustedError,
                     WitnessError)
from .graph import (PartiteGraph, Transversal, beta_violation,
                    saturation_violation, verify_alpha_witness)
from .search import alpha_bounded_search, beta_exact
from .serialize import (graph_from_json, graph_hash, graph_to_dot,
                        graph_to_json, graph_to_obj)

EXIT_OK = 0
EXIT_PARAMS = 2
EXIT_VERIFY = 3
EXIT_RESOURCE = 4


@dataclass
class RunReport:
    exit_code: int
    summary: str
    output_text: str | None = None
    payload: dict = field(default_factory=dict)
    cache_hit: bool = False


def _emit(args, report: RunReport, elapsed: float) -> int:
    if report.output_text is not None:
        if getattr(args, "output", None):
            with open(args.output, "w") as fh:
                fh.write(report.output_text)
        else:
            sys.stdout.write(report.output_text)
    hit = " [cache]" if report.cache_hit else ""
    print(f"{report.summary}  ({elapsed:.2f}s){hit}", file=sys.stderr)
    return report.exit_code


def _read_graph(path: str) -> tuple[PartiteGraph, Transversal | None]:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return graph_from_json(text)


# -- construct ----------------------------------------------------------------


def _construct_object(args):
    """Build the requested witness; returns (graph, X-or-None, provenance, summary)."""
    sub = args.generator
    if sub == "alpha-base":
        w = alpha_base(args.r, args.p)
        return w.graph, w.transversal, w.provenance, f"alpha-base r={args.r} p={args.p}: value {w.value}"
    if sub == "alpha-blowup":
        base = alpha_base(args.r, args.p)
        w = alpha_blowup(base, args.k)
        prov = dict(w.provenance)
        prov["origin"] = {str(c): o for c, o in prov.get("origin", {}).items()}
        return w.graph, w.transversal, prov, f"alpha-blowup k={args.k}: value {w.value}"
    if sub == "alpha-from-beta2":
        if args.input:
            g, _ = _read_graph(args.input)
            g1 = BetaWitness(g, 2, g.part_count, args.r - 1, {"name": "file", "params": {"path": args.input}})
            g1.verify()
        else:
            g1 = best_beta2_witness(args.k, args.r - 1)
        w = alpha_from_beta2(g1, args.r)
        return w.graph, w.transversal, w.provenance, f"alpha-from-beta2 r={args.r}: value {w.value}"
    if sub == "beta-cycle":
        w = cycle_power_witness(args.i, args.r, args.k)
        return w.graph, None, w.provenance, f"beta-cycle i={args.i} r={args.r} k={args.k}: size {w.size}"
    if sub == "beta-cliques":
        w = disjoint_cliques_witness(args.i, args.r, args.k)
        return w.graph, None, w.provenance, f"beta-cliques i={args.i} r={args.r} k={args.k}: size {w.size}"
    if sub == "beta-step":
        g, _ = _read_graph(args.input)
        h = BetaWitness(g, args.i, g.part_count, args.r, {"name": "file", "params": {"path": args.input}})
        h.verify()
        w = beta_inductive_step(h)
        return w.graph, None, w.provenance, f"beta-step -> (i={w.i}, k={w.k}, r={w.r}): size {w.size}"
    if sub == "beta2-small":
        w = beta2_small_witness(args.k, args.r)
        return w.graph, None, w.provenance, f"beta2-small k={args.k} r={args.r}: size {w.size}"
    if sub == "beta2-combine":
        g1 = best_beta2_witness(args.r1, args.r1 - 1)
        g2 = best_beta2_witness(args.r2, args.r2 - 1)
        w = beta2_combine(g1, g2)
        return w.graph, None, w.provenance, f"beta2-combine {args.r1}+{args.r2}: size {w.size}"
    if sub == "sat-witness":
        src = sat_source(args.k, args.r)
        g = sat_witness(args.k, args.r, args.n, source=src)
        prov = {"name": "sat-witness",
                "params": {"k": args.k, "r": args.r, "n": args.n},
                "source": src.provenance, "boundary": src.value}
        return g, None, prov, (f"sat-witness k={args.k} r={args.r} n={args.n}: "
                               f"{g.n_vertices} vertices, {g.n_edges} edges")
    raise InputError(f"unknown generator {sub}")


def cmd_construct(args) -> RunReport:
    g, x, prov, summary = _construct_object(args)
    if args.format == "dot":
        text = graph_to_dot(g, x)
    else:
        text = graph_to_json(g, x, provenance=prov)
    return RunReport(EXIT_OK, summary, output_text=text)


# -- verify ---------------------------------------------------------------------


def cmd_verify(args) -> RunReport:
    g, x = _read_graph(args.input)
    if args.mode == "saturated":
        vio = saturation_violation(g, args.r)
        ok = vio is None
        payload = {"mode": "saturated", "r": args.r, "pass": ok,
                   "violation": vio}
        summary = "saturated: pass" if ok else f"saturated: FAIL {vio}"
    elif args.mode == "alpha":
        if x is None:
            raise InputError("alpha mode needs a transversal ('X' field) in the file")
        try:
            value = verify_alpha_witness(g, x, args.r)
            payload = {"mode": "alpha", "r": args.r, "pass": True, "value": value}
            summary = f"alpha witness: pass, value {value}"
            ok = True
        except WitnessError as exc:
            payload = {"mode": "alpha", "r": args.r, "pass": False,
                       "violation": exc.violation}
            summary = f"alpha witness: FAIL {exc.violation}"
            ok = False
    elif args.mode == "beta":
        vio = beta_violation(g, args.i, args.r)
        ok = vio is None
        payload = {"mode": "beta", "i": args.i, "r": args.r, "pass": ok,
                   "violation": vio}
        summary = "beta witness: pass" if ok else f"beta witness: FAIL {vio}"
    else:
        raise InputError(f"unknown mode {args.mode}")
    text = json.dumps(payload, indent=2, default=list) + "\n"
    return RunReport(EXIT_OK if ok else EXIT_VERIFY, summary, output_text=text,
                     payload=payload)


# -- search ---------------------------------------------------------------------


def _outcome_payload(out) -> dict:
    payload = {
        "status": out.status,
        "value": out.value,
        "nodes_explored": out.nodes_explored,
        "budget": out.budget,
        "heuristic": out.heuristic,
        "seed": out.seed,
        "witness": None,
    }
    if out.witness is not None:
        payload["witness"] = graph_to_obj(out.witness, out.transversal)
    return payload


def cmd_search(args) -> RunReport:
    if args.oracle == "beta-exact":
        query = {"command": "beta-exact", "i": args.i, "k": args.k, "r": args.r,
                 "max_n": args.max_n}
        runner = lambda: beta_exact(args.i, args.k, args.r, args.max_n,
                                    node_budget=args.budget)
        seed = None
    else:
        query = {"command": "alpha-bounded", "k": args.k, "r": args.r,
                 "max_part_size": args.max_part_size, "seed": args.seed}
        runner = lambda: alpha_bounded_search(args.k, args.r, args.max_part_size,
                                              budget=args.budget, seed=args.seed)
        seed = args.seed

    cache_hit = False
    payload = None
    if not args.no_cache:
        rec = cache_lookup(query)
        if rec is not None:
            payload = rec["outcome"]
            cache_hit = True
    if payload is None:
        out = runner()
        payload = _outcome_payload(out)
        if not args.no_cache:
            whash = None
            if out.witness is not None:
                whash = graph_hash(out.witness)
            cache_append(query, payload, whash, seed, __version__)
    text = json.dumps(payload, indent=2) + "\n"
    summary = f"{args.oracle}: {payload['status']} value={payload['value']}"
    return RunReport(EXIT_OK, summary, output_text=text, payload=payload,
                     cache_hit=cache_hit)


# -- table ----------------------------------------------------------------------


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def cmd_table(args) -> RunReport:
    rows = []
    for r in _parse_range(args.r):
        for k in _parse_range(args.k):
            if k < r:
                continue
            rec = bounds_table(k, r)
            row = {"k": k, "r": r, "lower": rec.lower, "upper": rec.upper,
                   "exact": rec.exact, "source": ";".join(rec.sources)}
            if args.n is not None:
                src = sat_source(k, r)
                if args.n >= src.value + 1:
                    row["sat_edges_n"] = sat_witness(k, r, args.n, source=src).n_edges
                else:
                    row["sat_edges_n"] = None
            rows.append(row)
    if not rows:
        raise InputError("empty (k, r) range")
    cols = list(rows[0].keys())
    if args.format == "csv":
        lines = [",".join(cols)]
        for row in rows:
            lines.append(",".join("" if row[c] is None else str(row[c]) for c in cols))
        text = "\n".join(lines) + "\n"
    else:
        widths = {c: max(len(c), max(len(str(row[c])) for row in rows)) for c in cols}
        lines = ["  ".join(c.ljust(widths[c]) for c in cols)]
        for row in rows:
            lines.append("  ".join(str(row[c] if row[c] is not None else "-").ljust(widths[c])
                                   for c in cols))
        text = "\n".join(lines) + "\n"
    return RunReport(EXIT_OK, f"table: {len(rows)} rows", output_text=text)


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="partsat",
                                 description="clique saturation in multipartite graphs")
    ap.add_argument("--version", action="version", version=f"partsat {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build and emit a certified witness")
    cg = c.add_subparsers(dest="generator", required=True)

    def common_io(p):
        p.add_argument("--format", choices=["json", "dot"], default="json")
        p.add_argument("--output", help="write here instead of stdout")

    p = cg.add_parser("alpha-base")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    common_io(p)
    p = cg.add_parser("alpha-blowup")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common_io(p)
    p = cg.add_parser("alpha-from-beta2")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--input", help="graph JSON of an i=2 witness for (k, r-1)")
    common_io(p)
    p = cg.add_parser("beta-cycle")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common_io(p)
    p = cg.add_parser("beta-cliques")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common_io(p)
    p = cg.add_parser("beta-step")
    p.add_argument("--input", required=True, help="graph JSON of the base witness")
    p.add_argument("--i", type=int, required=True, help="i of the base witness")
    p.add_argument("--r", type=int, required=True, help="r of the base witness")
    common_io(p)
    p = cg.add_parser("beta2-small")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    common_io(p)
    p = cg.add_parser("beta2-combine")
    p.add_argument("--r1", type=int, required=True)
    p.add_argument("--r2", type=int, required=True)
    common_io(p)
    p = cg.add_parser("sat-witness")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    common_io(p)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a graph JSON file")
    v.add_argument("--mode", choices=["saturated", "alpha", "beta"], required=True)
    v.add_argument("--input", required=True)
    v.add_argument("--r", type=int, required=True)
    v.add_argument("--i", type=int, help="deleted-part count for beta mode")
    v.add_argument("--output")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="run an exhaustive or heuristic search")
    so = s.add_subparsers(dest="oracle", required=True)
    p = so.add_parser("beta-exact")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.add_argument("--budget", type=int, default=10 ** 8)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--output")
    p = so.add_parser("alpha-bounded")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-part-size", dest="max_part_size", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--output")
    s.set_defaults(func=cmd_search)

    t = sub.add_parser("table", help="bounds table over (k, r) ranges")
    t.add_argument("--r", required=True, help="value or range lo..hi")
    t.add_argument("--k", required=True, help="value or range lo..hi")
    t.add_argument("--n", type=int, help="also tabulate construction edge counts at n")
    t.add_argument("--format", choices=["pretty", "csv"], default="pretty")
    t.add_argument("--output")
    t.set_defaults(func=cmd_table)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "mode", None) == "beta" and args.i is None:
        print("error: beta mode requires --i", file=sys.stderr)
        return EXIT_PARAMS
    t0 = time.time()
    try:
        report = args.func(args)
    except WitnessError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ResourceExhaustedError as exc:
        print(f"resource exhausted: {exc}", file=sys.stderr)
        if exc.partial is not None:
            print(json.dumps({"partial": exc.partial}, default=str), file=sys.stderr)
        return EXIT_RESOURCE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except PartsatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    return _emit(args, report, time.time() - t0)


if __name__ == "__main__":
    sys.exit(main())
