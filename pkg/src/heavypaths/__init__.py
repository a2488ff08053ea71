"""Top-k heaviest fixed-length simple paths in weighted graphs.

Exact solvers (exhaustive DFS, avoidance-set dynamic programming, rank
join, and the buffered threshold run) plus a memory-bounded heuristic, a
greedy baseline, instance loaders/generators, and an instrumented
comparison harness.
"""

from .baselines import dfs_topk, dp_topk, enumerate_all_paths, greedy_path
from .generate import generate_fig3, generate_random
from .graph import (
    GraphError,
    SortedEdgeList,
    WeightedGraph,
    build_cooccurrence_graph,
    dice_coefficient,
    normalize_for_lightest,
    sorted_edges,
)
from .harness import ALL_ALGOS, EXACT_ALGOS, compare_algorithms, solve
from .heavypath import (
    HeavyPathRun,
    HeuristicFailure,
    HeuristicResult,
    heavy_path_heuristic,
    heavy_path_topk,
    ra_admissible,
    stitched_upper_bound,
)
from .io import FormatError, load_dimacs, load_edge_list, write_edge_list
from .metrics import (
    RunMetrics,
    ThresholdTrace,
    read_metrics_csv,
    read_trace_csv,
    write_metrics_csv,
    write_trace_csv,
)
from .paths import Path, PathBuffer, ThresholdState, canonical, extend
from .rankjoin import rank_join_depth_probe, rank_join_topk
from .results import GreedyResult, ResourceLimitError, TopKResult

__all__ = [
    "ALL_ALGOS",
    "EXACT_ALGOS",
    "FormatError",
    "GraphError",
    "GreedyResult",
    "HeavyPathRun",
    "HeuristicFailure",
    "HeuristicResult",
    "Path",
    "PathBuffer",
    "ResourceLimitError",
    "RunMetrics",
    "SortedEdgeList",
    "ThresholdState",
    "ThresholdTrace",
    "TopKResult",
    "WeightedGraph",
    "build_cooccurrence_graph",
    "canonical",
    "compare_algorithms",
    "dfs_topk",
    "dice_coefficient",
    "dp_topk",
    "enumerate_all_paths",
    "extend",
    "generate_fig3",
    "generate_random",
    "greedy_path",
    "heavy_path_heuristic",
    "heavy_path_topk",
    "load_dimacs",
    "load_edge_list",
    "normalize_for_lightest",
    "ra_admissible",
    "rank_join_depth_probe",
    "rank_join_topk",
    "read_metrics_csv",
    "read_trace_csv",
    "solve",
    "sorted_edges",
    "stitched_upper_bound",
    "write_edge_list",
    "write_metrics_csv",
    "write_trace_csv",
]
