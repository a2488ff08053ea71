"""Command-line interface.

Subcommands:
  solve    run one algorithm on an instance file and print ranked paths
  compare  run several algorithms, assert the exact ones agree, print metrics
  gen      write synthetic instances in edge-list format

Exit codes: 0 success, 2 exhausted before k results (output still
printed), 1 any error.
"""

from __future__ import annotations

import argparse
import sys

from .generate import generate_fig3, generate_random
from .graph import GraphError, normalize_for_lightest
from .harness import ALL_ALGOS, compare_algorithms, solve
from .io import FormatError, load_dimacs, load_edge_list, write_edge_list
from .metrics import METRICS_HEADER, ThresholdTrace, write_metrics_csv, write_trace_csv
from .results import ResourceLimitError


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # spec'd exit codes: usage problems are errors (1), not argparse's 2
    def error(self, message):
        raise CliError(message)


def _build_parser():
    parser = _Parser(prog="heavypaths", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance_flags(p):
        p.add_argument("--input", required=True, help="instance file")
        p.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
        p.add_argument("--length", type=int, required=True, help="path length (edges)")
        p.add_argument("--topk", type=int, default=1)
        p.add_argument("--normalize-lightest", action="store_true",
                       help="flip weights (w -> 1 - w/w_max) before solving")
        p.add_argument("--metrics", metavar="FILE", help="write metrics CSV")

    p_solve = sub.add_parser("solve", help="run one algorithm")
    add_instance_flags(p_solve)
    p_solve.add_argument("--algo", choices=ALL_ALGOS, required=True)
    p_solve.add_argument("--ra-strategy", choices=("on", "off"), default=None,
                         help="random access strategy (heavypath only, default on)")
    p_solve.add_argument("--capacity", type=int, default=None,
                         help="buffer path cap; triggers heuristic takeover (heavypath only)")
    p_solve.add_argument("--trace-thresholds", metavar="FILE",
                         help="write threshold decay CSV (rankjoin/heavypath only)")

    p_cmp = sub.add_parser("compare", help="run several algorithms and cross-check")
    add_instance_flags(p_cmp)
    p_cmp.add_argument("--algos", required=True, help="comma-separated algorithm list")
    p_cmp.add_argument("--ra-strategy", choices=("on", "off"), default=None,
                       help="random access strategy for the heavypath run")

    p_gen = sub.add_parser("gen", help="generate instances")
    gen_sub = p_gen.add_subparsers(dest="generator", required=True)
    p_fig3 = gen_sub.add_parser("fig3", help="one heavy chain plus n light fan paths")
    p_fig3.add_argument("--n", type=int, required=True)
    p_fig3.add_argument("--out", help="output file (default stdout)")
    p_rand = gen_sub.add_parser("random", help="seeded random graph")
    p_rand.add_argument("--nodes", type=int, required=True)
    p_rand.add_argument("--p", type=float, required=True)
    p_rand.add_argument("--seed", type=int, default=0)
    p_rand.add_argument("--weights", choices=("uniform", "exponential"), default="uniform")
    p_rand.add_argument("--distinct-weights", action="store_true")
    p_rand.add_argument("--out", help="output file (default stdout)")
    return parser


def _load_graph(args):
    loader = load_edge_list if args.format == "edgelist" else load_dimacs
    graph = loader(args.input)
    if args.normalize_lightest:
        graph = normalize_for_lightest(graph)
    return graph


def _print_result(graph, result, out):
    for rank, path in enumerate(result.paths, start=1):
        out.write(f"# rank={rank}\n")
        out.write(path.serialize(graph) + "\n")
    if result.heuristic is not None:
        h = result.heuristic
        out.write(f"rho={h.rho!r} u_ell={h.u_ell!r} j={h.j}\n")


def _cmd_solve(args, out):
    if args.algo != "heavypath":
        if args.ra_strategy is not None:
            raise CliError("--ra-strategy is only valid with --algo heavypath")
        if args.capacity is not None:
            raise CliError("--capacity is only valid with --algo heavypath")
        if args.trace_thresholds and args.algo not in ("rankjoin",):
            raise CliError("--trace-thresholds requires --algo rankjoin or heavypath")
    if args.algo == "greedy" and args.topk != 1:
        raise CliError("greedy answers only top-1; use --topk 1")
    graph = _load_graph(args)
    trace = ThresholdTrace() if args.trace_thresholds else None
    result = solve(
        graph,
        args.algo,
        args.length,
        args.topk,
        ra_strategy=(args.ra_strategy != "off"),
        capacity=args.capacity,
        instance=args.input,
        trace=trace,
    )
    _print_result(graph, result, out)
    if args.metrics:
        write_metrics_csv(args.metrics, [result.metrics])
    if args.trace_thresholds:
        write_trace_csv(args.trace_thresholds, trace)
    return 2 if result.exhausted else 0


def _cmd_compare(args, out):
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    unknown = [a for a in algos if a not in ALL_ALGOS]
    if unknown:
        raise CliError(f"unknown algorithms: {', '.join(unknown)}")
    if "greedy" in algos and args.topk != 1:
        raise CliError("greedy answers only top-1; use --topk 1")
    graph = _load_graph(args)
    report = compare_algorithms(
        graph,
        args.length,
        args.topk,
        algos,
        ra_strategy=(args.ra_strategy != "off"),
        instance=args.input,
    )
    out.write("MATCH\n" if report.match else "MISMATCH\n")
    for line in report.mismatches:
        out.write(f"# {line}\n")
    rows = [m.csv_row() for m in report.metrics_rows()]
    widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) for i, h in enumerate(METRICS_HEADER)]
    out.write("  ".join(h.ljust(w) for h, w in zip(METRICS_HEADER, widths)).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")
    if args.metrics:
        write_metrics_csv(args.metrics, report.metrics_rows())
    return 0 if report.match else 1


def _cmd_gen(args, out):
    if args.generator == "fig3":
        graph = generate_fig3(args.n)
    else:
        graph = generate_random(
            args.nodes,
            args.p,
            weight_distribution=args.weights,
            seed=args.seed,
            distinct_weights=args.distinct_weights,
        )
    if args.out:
        write_edge_list(graph, args.out)
    else:
        out.write(write_edge_list(graph))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    out = sys.stdout
    try:
        args = parser.parse_args(argv)
        if args.command == "solve":
            return _cmd_solve(args, out)
        if args.command == "compare":
            return _cmd_compare(args, out)
        return _cmd_gen(args, out)
    except (CliError, GraphError, FormatError, ResourceLimitError, ValueError) as exc:
        print(f"heavypaths: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"heavypaths: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
