"""Command-line entry point: ``nsd-forge <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .coloring import ColoringError, emit_coloring, parse_coloring, verify
from .dispatch import QM_ONLY, STRATEGIES, color_graph
from .exact import SearchBudget, min_index
from .graph import FAMILIES, FamilySpec, GraphInputError, emit_edgelist, emit_graph6, generate, read_graph
from .theorems import FAMILY_NAMES, HarnessConfig, bipartite_survey, run, to_records, to_tsv

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MODES = {"qm": "quasi_majority", "majority": "majority"}


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _graph(args):
    return read_graph(_read(args.input), args.format)


def _budget(args) -> SearchBudget:
    return SearchBudget(args.max_k, args.node_limit, args.time_limit)


def cmd_generate(args) -> int:
    p = Fraction(args.p).limit_denominator(10**6)
    spec = FamilySpec(args.family, args.n, args.m, p.numerator, p.denominator, args.seed)
    spec.validate()
    g = generate(spec)
    fmt = "graph6" if args.format == "auto" else args.format
    _write(args.output, emit_graph6(g) if fmt == "graph6" else emit_edgelist(g))
    return EXIT_OK


def cmd_color(args) -> int:
    mode = MODES[args.mode]
    if mode == "majority" and args.strategy in QM_ONLY:
        raise UsageError(f"strategy {args.strategy} is only available with --mode qm")
    g = _graph(args)
    out = color_graph(g, mode, args.strategy, _budget(args))
    report = verify(g, out.coloring, mode, out.k)
    doc = {
        "strategy": out.strategy,
        "family": out.family,
        "k": out.k,
        "colors": out.coloring.colors,
        "edges": [list(e) for e in g.edges],
        "report": report.to_dict(),
    }
    if not report.passed:
        sys.stderr.write(json.dumps({"error": "verification failed", "report": report.to_dict()}) + "\n")
        return EXIT_FAIL
    _write(args.output, json.dumps(doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _graph(args)
    c = parse_coloring(_read(args.coloring), g)
    report = verify(g, c, MODES[args.mode], args.k)
    _write(args.output, report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_index(args) -> int:
    g = _graph(args)
    mode = MODES[args.mode]
    res = min_index(g, mode, _budget(args))
    doc = {"status": res.status, "k": res.k, "lower": res.lower, "nodes": res.nodes,
           "per_k": {str(k): v for k, v in res.per_k.items()}}
    if res.witness is not None:
        report = verify(g, res.witness, mode, res.k)
        if not report.passed:
            sys.stderr.write(json.dumps({"error": "verification failed", "report": report.to_dict()}) + "\n")
            return EXIT_FAIL
        doc["witness"] = res.witness.colors
    _write(args.output, json.dumps(doc))
    return EXIT_OK


def cmd_check_theorems(args) -> int:
    families = tuple(args.families.split(",")) if args.families else FAMILY_NAMES
    unknown = [f for f in families if f not in FAMILY_NAMES]
    if unknown:
        raise UsageError(f"unknown families: {', '.join(unknown)}")
    cfg = HarnessConfig(
        families=families, max_n=args.max_n, trees=args.trees, tree_max_n=args.tree_max_n,
        seed=args.seed, oracle_max_edges=args.oracle_max_edges,
        time_limit=args.time_limit or 20.0, node_limit=args.node_limit,
    )
    rows = run(cfg, args.workers)
    _write(args.output, to_tsv(rows).rstrip("\n"))
    survey = bipartite_survey(args.bipartite_survey, args.seed) if args.bipartite_survey else None
    if survey is not None:
        sys.stderr.write(json.dumps({"bipartite_survey": survey}) + "\n")
    if args.json:
        doc: object = to_records(rows)
        if survey is not None:
            doc = {"rows": doc, "bipartite_survey": survey}
        _write(args.json, json.dumps(doc))
    return EXIT_FAIL if any(r.status == "mismatch" for r in rows) else EXIT_OK


def _graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", default="-", help="graph file, or - for stdin")
    p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
    p.add_argument("--mode", choices=tuple(MODES), default="qm")
    p.add_argument("-o", "--output", default=None)


def _budget_args(p: argparse.ArgumentParser, max_k: int = 12) -> None:
    p.add_argument("--max-k", type=int, default=max_k)
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=None, help="seconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nsd-forge", description="Neighbor-sum-distinguishing edge colorings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a graph from a named family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int, nargs="?", default=0, help="second side, or degree for random_regular")
    p.add_argument("--p", default="1/2", help="edge probability, e.g. 0.3 or 1/3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="graph6")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("color", help="construct and verify a coloring")
    _graph_args(p)
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")
    _budget_args(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring against a graph")
    _graph_args(p)
    p.add_argument("--coloring", required=True, help="JSON file with colors in edge order")
    p.add_argument("--k", type=int, default=None, help="palette bound (defaults to the file's k)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("index", help="exact minimum palette by search")
    _graph_args(p)
    _budget_args(p)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("check-theorems", help="constructed vs exact indices on families")
    p.add_argument("--families", default=None, help="comma list from: " + ",".join(FAMILY_NAMES))
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--trees", type=int, default=200)
    p.add_argument("--tree-max-n", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-max-edges", type=int, default=12)
    p.add_argument("--time-limit", type=float, default=None, help="seconds per oracle call")
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--workers", type=int, default=None, help="defaults to NSD_FORGE_THREADS")
    p.add_argument("--bipartite-survey", type=int, default=0, metavar="N",
                   help="also report exact indices of N random bipartite graphs")
    p.add_argument("--json", default=None, help="also write rows as JSON here")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_check_theorems)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphInputError, ColoringError, ValueError, OSError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc), "kind": type(exc).__name__}) + "\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
