"""Command line entry point: ``strongedge <command> [options]``.

Exit status is 0 on success, 1 when a verification or audit fails and 2 on
bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .bench import report_to_json, run_bench
from .coloring import (
    CHECKS,
    audit,
    color_graph,
    coloring_from_json,
    coloring_to_json,
    verify_strong_coloring,
)
from .exact import exact_chi_s, exact_to_json
from .generators import FAMILIES, GenSpec, generate
from .graph import GraphError, format_graph, parse_graph
from .ordering import (
    NotKDegenerateError,
    build_ordering,
    degeneracy,
    ordering_from_json,
    ordering_to_json,
    verify_ordering,
)

DEFAULT_SEED = 0


class InputError(Exception):
    pass


def _read_graph(args):
    try:
        text = Path(args.input).read_text(encoding="utf-8") if args.input else sys.stdin.read()
    except OSError as exc:
        raise InputError(f"cannot read graph: {exc}") from None
    return parse_graph(text)


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def _table(rows: list[dict], columns: list[str]) -> str:
    cells = [[("-" if r.get(c) is None else str(r.get(c))) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


# ------------------------------------------------------------------ commands


def cmd_degeneracy(args) -> int:
    g = _read_graph(args)
    cert = degeneracy(g)
    payload = {
        "k": cert.k,
        "peel_order": [g.label(v) for v in cert.peel_order],
        "back_degrees": [cert.back_degrees[v] for v in cert.peel_order],
    }
    _emit(args, payload, f"degeneracy {cert.k}\npeel order {' '.join(map(str, payload['peel_order']))}")
    return 0


def cmd_order(args) -> int:
    g = _read_graph(args)
    k = degeneracy(g).k if args.k is None else args.k
    ordering = build_ordering(g, k)
    records = ordering_to_json(g, ordering)
    text = _table(
        [{"pos": r["pos"], "id": r["id"], "edge": f"{r['edge'][0]}-{r['edge'][1]}", "special": r["special"]}
         for r in records],
        ["pos", "id", "edge", "special"],
    )
    _emit(args, records, f"k = {k}\n{text}")
    return 0


def cmd_color(args) -> int:
    g = _read_graph(args)
    coloring, report, _ = color_graph(g, args.k)
    payload = coloring_to_json(g, coloring, report)
    text = (
        f"n={report.n} m={report.m} k={report.k} max_degree={report.max_degree}\n"
        f"colors_used={report.colors_used} bound={report.bound}\n{report.detail}"
    )
    _emit(args, payload, text)
    return 0 if report.valid and report.within_bound else 1


def cmd_verify(args) -> int:
    g = _read_graph(args)
    if not args.coloring and not args.ordering:
        raise InputError("verify needs --coloring and/or --ordering")
    payload: dict = {}
    lines = []
    ok = True
    if args.coloring:
        verdict = verify_strong_coloring(g, coloring_from_json(g, _read_json(args.coloring)))
        payload["coloring"] = {
            "valid": verdict.ok,
            "pair": list(verdict.pair) if verdict.pair else None,
            "color": verdict.color,
        }
        lines.append(verdict.describe())
        ok &= verdict.ok
    if args.ordering:
        k = degeneracy(g).k if args.k is None else args.k
        verdict = verify_ordering(g, k, ordering_from_json(g, _read_json(args.ordering), k))
        payload["ordering"] = {"valid": verdict.ok, "position": verdict.position, "reason": verdict.reason}
        lines.append("valid ordering" if verdict.ok else f"position {verdict.position}: {verdict.reason}")
        ok &= verdict.ok
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


def cmd_audit(args) -> int:
    g = _read_graph(args)
    k = degeneracy(g).k if args.k is None else args.k
    records = audit(g, k, build_ordering(g, k))
    failed = [r for r in records if not r.passed]
    text = _table(
        [
            {
                "pos": r.position, "edge": r.edge, "u": r.u, "v": r.v,
                "total": r.total_conflicts, "u_side": r.u_side_count, "v_side": r.v_side_count,
                "|X1|": len(r.X1), "|Y1|": len(r.Y1),
                "failed": ",".join(c for c in CHECKS if not r.checks[c]) or None,
            }
            for r in records
        ],
        ["pos", "edge", "u", "v", "total", "u_side", "v_side", "|X1|", "|Y1|", "failed"],
    )
    _emit(args, [r.to_json() for r in records], f"k = {k}, {len(failed)} failing records\n{text}")
    return 1 if failed else 0


def cmd_exact(args) -> int:
    g = _read_graph(args)
    if args.budget <= 0:
        raise InputError("--budget must be positive")
    result = exact_chi_s(g, args.budget)
    status = "timed out, best found" if result.timed_out else "exact"
    _emit(args, exact_to_json(g, result),
          f"chi_s = {result.chi_s} ({status}; lower bound {result.lower_bound}; {result.nodes_explored} nodes)")
    return 0


def cmd_gen(args) -> int:
    try:
        spec = GenSpec(args.family, args.n, args.k if args.k is not None else 1, args.seed, args.parallel_prob)
        g = generate(spec)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    text = format_graph(g)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    try:
        rows = run_bench(
            args.family,
            args.n,
            args.k if args.k is not None else 2,
            args.count,
            args.seed,
            parallel_prob=args.parallel_prob,
            jobs=args.jobs,
            exact=args.exact,
            budget=args.budget,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = report_to_json(rows, timing=not args.no_timing)
    s = report["summary"]
    cols = ["name", "n", "m", "k", "max_degree", "colors_used", "bound", "slack", "exact", "audit_pass"]
    if not args.no_timing:
        cols.append("wall_time")
    text = _table(report["rows"], cols) + (
        f"\n{s['count']} graphs, min slack {s['min_slack']}, "
        f"valid={s['all_valid']} audits={s['all_audits_pass']}"
    )
    _emit(args, report, text)
    return 0 if s["ok"] else 1


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongedge",
        description="Strong edge-coloring of k-degenerate multigraphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_, graph=True):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("json", "text"), default="json")
        if graph:
            p.add_argument("--input", metavar="PATH", help="graph file (default: stdin)")
        return p

    add("degeneracy", cmd_degeneracy, "degeneracy and peeling order")
    p = add("order", cmd_order, "special-edge ordering")
    p.add_argument("--k", type=int)
    p = add("color", cmd_color, "greedy strong edge-coloring with report")
    p.add_argument("--k", type=int)
    p = add("verify", cmd_verify, "check a coloring and/or an ordering")
    p.add_argument("--coloring", metavar="PATH")
    p.add_argument("--ordering", metavar="PATH")
    p.add_argument("--k", type=int)
    p = add("audit", cmd_audit, "per-edge conflict counts against the proof bounds")
    p.add_argument("--k", type=int)
    p = add("exact", cmd_exact, "exact strong chromatic index (small graphs)")
    p.add_argument("--budget", type=int, default=1_000_000, help="search node limit")

    p = add("gen", cmd_gen, "generate a graph in edge-list format", graph=False)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--parallel-prob", type=float, default=0.0)
    p.add_argument("--output", metavar="PATH")

    p = add("bench", cmd_bench, "run the pipeline over a seeded corpus", graph=False)
    p.add_argument("--family", choices=FAMILIES, default="random-k-degenerate")
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--k", type=int)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--parallel-prob", type=float, default=0.0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--exact", action="store_true", help="also run the exact solver on graphs with few edges")
    p.add_argument("--budget", type=int, default=200_000)
    p.add_argument("--no-timing", action="store_true", help="omit wall times (byte-stable output)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphError, NotKDegenerateError) as exc:
        print(f"strongedge {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
