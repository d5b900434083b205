"""``stablecore`` command line.

Exit codes: 0 success, 1 counterexample found, 2 input error, 3 the input
is a valid graph but not a tree.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .core import core_pendant_report
from .formats import ParseError, parse_edge_list, parse_graph6, to_dot, to_edge_list, to_graph6
from .graph import Graph, GraphError, Tree, prufer_decode, random_tree, spider
from .search import open_problem_search
from .theorems import THEOREM_IDS, SweepPlan, summary_table, sweep, to_jsonl

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_NOT_TREE = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_source(args) -> str:
    if args.edges is not None:
        if args.input is not None:
            raise CliError("give either an input path or --edges, not both", EXIT_INPUT)
        return args.edges.replace(";", "\n")
    if args.input is None or args.input == "-":
        return sys.stdin.read()
    try:
        return Path(args.input).read_text()
    except OSError as e:
        raise CliError(f"cannot read {args.input}: {e.strerror}", EXIT_INPUT) from None


def _parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "auto":
        first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
        fmt = "graph6" if first and len(first.split()) == 1 else "edge-list"
    try:
        return parse_graph6(text) if fmt == "graph6" else parse_edge_list(text)
    except ParseError as e:
        raise CliError(f"parse error: {e}", EXIT_INPUT) from None
    except GraphError as e:
        raise CliError(f"parse error: {e}", EXIT_INPUT) from None


def _as_tree(g: Graph) -> Tree:
    try:
        return g.as_tree()
    except GraphError as e:
        raise CliError(f"not a tree: {e}", EXIT_NOT_TREE) from None


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _render(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "dot":
        rep = core_pendant_report(g) if isinstance(g, Tree) else None
        return to_dot(g, rep)
    if fmt == "json":
        return core_pendant_report(_as_tree(g)).dumps() + "\n"
    return to_edge_list(g)


# -- subcommands ------------------------------------------------------------

def cmd_analyze(args) -> int:
    t = _as_tree(_parse_graph(_read_source(args), args.format))
    _emit(core_pendant_report(t).dumps() + "\n", args.output)
    return EXIT_OK


def _theorems(values: list[str] | None) -> tuple[str, ...]:
    if not values:
        return THEOREM_IDS
    chosen = [x.strip() for v in values for x in v.split(",") if x.strip()]
    unknown = [x for x in chosen if x not in THEOREM_IDS]
    if unknown:
        raise CliError(f"unknown theorem id(s): {', '.join(unknown)}", EXIT_INPUT)
    return tuple(x for x in THEOREM_IDS if x in chosen)


def _plan(args, theorems=THEOREM_IDS) -> SweepPlan:
    if args.random:
        lo = args.n if args.n is not None else args.min_n
        hi = args.n if args.n is not None else args.max_n
        mode, count = "random", args.count
    else:
        if args.n is not None:
            raise CliError("--n applies to --random sweeps; use --min-n/--max-n", EXIT_INPUT)
        lo, hi, mode, count = args.min_n, args.max_n, "exhaustive", 0
    try:
        return SweepPlan(mode, lo, hi, count, args.seed, theorems)
    except ValueError as e:
        raise CliError(str(e), EXIT_INPUT) from None


def _report(data: str, table: str, output: str | None) -> None:
    # the table goes wherever the data does not
    if output:
        Path(output).write_text(data)
        sys.stdout.write(table)
    else:
        sys.stdout.write(data)
        sys.stderr.write(table)


def cmd_verify(args) -> int:
    plan = _plan(args, _theorems(args.theorem))
    records = sweep(plan, args.threads)
    _report(to_jsonl(records), summary_table(records), args.output)
    return EXIT_COUNTEREXAMPLE if any(r.verdict == "counterexample" for r in records) else EXIT_OK


def cmd_search(args) -> int:
    plan = _plan(args)
    rules = ["half_n", "min_bipartition"] if args.k_rule == "both" else [args.k_rule]
    cap = None if args.max_candidates < 0 else args.max_candidates
    reports = [open_problem_search(r, plan, cap) for r in rules]
    _report("".join(r.dumps() + "\n" for r in reports), "".join(r.table() for r in reports), args.output)
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        if args.spider is not None:
            t = spider(args.spider)
        elif args.random is not None:
            n, seed = args.random
            t = random_tree(n, seed)
        else:
            seq = [int(x) for x in args.prufer.replace(",", " ").split()]
            t = prufer_decode(seq)
    except (GraphError, ValueError) as e:
        raise CliError(str(e), EXIT_INPUT) from None
    _emit(_render(t, args.to), args.output)
    return EXIT_OK


def cmd_convert(args) -> int:
    g = _parse_graph(_read_source(args), args.format)
    if isinstance(g, Graph) and g.n >= 2 and g.is_connected() and g.is_acyclic():
        g = g.as_tree()
    _emit(_render(g, args.to), args.output)
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="input file ('-' or omitted: stdin)")
    p.add_argument("--edges", help="inline edge list; ';' separates lines, e.g. '3 2;0 1;1 2'")
    p.add_argument("--format", choices=["auto", "edge-list", "graph6"], default="auto", help="input format")
    p.add_argument("-o", "--output", help="write data here instead of stdout")


def _add_plan(p: argparse.ArgumentParser, default_max: int) -> None:
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="every labeled tree (default)")
    mode.add_argument("--random", action="store_true", help="seeded random trees")
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-n", type=int, default=default_max)
    p.add_argument("--n", type=int, help="fixed order for --random")
    p.add_argument("--count", type=int, default=100, help="number of random trees")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="write data here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stablecore", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="core/pendant report of one tree as JSON")
    _add_input(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check the theorems over a family of trees")
    _add_plan(p, 7)
    p.add_argument("--theorem", action="append", help=f"restrict to these ids: {', '.join(THEOREM_IDS)}")
    p.add_argument("--threads", type=int, default=None, help="worker processes (default: $STABLECORE_THREADS, 0 = auto)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="pendant vertices in the intersection of size-k maximal stable sets")
    _add_plan(p, 8)
    p.add_argument("--k-rule", choices=["half-n", "min-bipartition", "half_n", "min_bipartition", "both"], default="both")
    p.add_argument("--max-candidates", type=int, default=50, help="stored count <= 1 trees per rule (-1 = all)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("generate", help="emit a spider, random or Prüfer tree")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--spider", type=int, metavar="K")
    src.add_argument("--random", type=int, nargs=2, metavar=("N", "SEED"))
    src.add_argument("--prufer", metavar="SEQ", help="space or comma separated sequence")
    p.add_argument("--to", choices=["edge-list", "graph6", "dot", "json"], default="edge-list")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("convert", help="convert between edge-list, graph6 and DOT")
    _add_input(p)
    p.add_argument("--to", choices=["edge-list", "graph6", "dot", "json"], required=True)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"stablecore: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
