"""Cross-algorithm orchestration: a single dispatch point for every
solver and the equality harness the comparison command is built on."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from .baselines import dfs_topk, dp_topk, greedy_path
from .graph import WeightedGraph, sorted_edges
from .heavypath import heavy_path_topk
from .metrics import RunMetrics, ThresholdTrace
from .rankjoin import rank_join_topk
from .results import TopKResult

EXACT_ALGOS = ("dfs", "dp", "rankjoin", "heavypath")
ALL_ALGOS = EXACT_ALGOS + ("greedy",)


def solve(
    graph: WeightedGraph,
    algo: str,
    length: int,
    k: int,
    *,
    ra_strategy: bool = True,
    capacity: int = None,
    instance: str = "",
    trace: ThresholdTrace = None,
) -> TopKResult:
    """Run one named solver; greedy is wrapped into the TopKResult shape."""
    metrics = RunMetrics(algo=algo, instance=instance)
    if algo == "dfs":
        return dfs_topk(graph, length, k, metrics=metrics)
    if algo == "dp":
        return dp_topk(graph, length, k, metrics=metrics)
    if algo == "rankjoin":
        return rank_join_topk(sorted_edges(graph), length, k, metrics=metrics, trace=trace)
    if algo == "heavypath":
        return heavy_path_topk(
            sorted_edges(graph), length, k,
            ra_strategy=ra_strategy, capacity=capacity, metrics=metrics, trace=trace,
        )
    if algo == "greedy":
        if k != 1:
            raise ValueError("greedy answers only top-1")
        out = greedy_path(graph, length, metrics=metrics)
        paths = [out.path] if out.path is not None else []
        return TopKResult(paths, out.path is None, out.metrics)
    raise ValueError(f"unknown algorithm {algo!r}")


@dataclass
class ComparisonReport:
    match: bool
    results: Dict[str, TopKResult]
    mismatches: List[str] = field(default_factory=list)

    def metrics_rows(self):
        return [r.metrics for r in self.results.values()]


def compare_algorithms(
    graph: WeightedGraph,
    length: int,
    k: int,
    algos,
    *,
    ra_strategy: bool = True,
    instance: str = "",
    solvers: Optional[Dict[str, Callable]] = None,
) -> ComparisonReport:
    """Run several solvers on one instance and check the exact ones agree.

    Exact algorithms must produce identical (weight, canonical sequence)
    lists, bit-exact on weights. greedy participates in the metrics table
    but not in the equality check. A solvers mapping can replace any
    algorithm's callable (the harness self-test injects a corrupted one).
    """
    results = {}
    for algo in algos:
        if solvers and algo in solvers:
            results[algo] = solvers[algo](graph, length, k)
        else:
            results[algo] = solve(
                graph, algo, length, k, ra_strategy=ra_strategy, instance=instance
            )
    exact = [a for a in algos if a in EXACT_ALGOS]
    mismatches = []
    if exact:
        reference = exact[0]
        ref_list = _signature(results[reference])
        for algo in exact[1:]:
            got = _signature(results[algo])
            if got != ref_list:
                mismatches.append(
                    f"{algo} disagrees with {reference}: {got!r} != {ref_list!r}"
                )
    return ComparisonReport(match=not mismatches, results=results, mismatches=mismatches)


def _signature(result: TopKResult):
    return [(p.weight, p.canonical_nodes) for p in result.paths] + [
        ("exhausted", result.exhausted)
    ]
