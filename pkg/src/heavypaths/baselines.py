"""Baseline solvers: exhaustive DFS, the avoidance-set dynamic program,
and the greedy edge-chaser.

dfs_topk is the correctness oracle for everything else in the package; it
enumerates every simple path of the requested length. dp_topk aggregates
ranked path segments per (end node, length, avoid set) and must agree with
dfs_topk wherever both complete. greedy_path is the quality baseline for
the memory-bounded heuristic.
"""

from __future__ import annotations

import heapq

from .graph import WeightedGraph, sorted_edges
from .metrics import RunMetrics, stopwatch
from .paths import Path, extend
from .results import GreedyResult, ResourceLimitError, TopKResult


def _ranked_topk(found, k):
    ordered = sorted(found.values(), key=Path.sort_key)
    return ordered[:k], len(ordered) < k


def dfs_topk(graph: WeightedGraph, length: int, k: int, *, metrics: RunMetrics = None) -> TopKResult:
    """Top-k heaviest simple paths of exactly `length` edges, by exhaustive
    depth-limited search from every node.

    Each path is counted once under canonical form. Returns fewer than k
    paths with the exhausted flag when fewer exist.
    """
    if length < 1 or k < 1:
        raise ValueError("length and k must be >= 1")
    metrics = metrics if metrics is not None else RunMetrics()
    metrics.algo = metrics.algo or "dfs"
    metrics.length, metrics.k = length, k
    with stopwatch(metrics):
        found = {}
        adjacency = graph.adjacency
        stack_nodes = []

        def visit(u, depth):
            stack_nodes.append(u)
            for v, _w in adjacency[u]:
                metrics.edge_reads += 1
                if v in stack_nodes:
                    continue
                if depth == length - 1:
                    nodes = tuple(stack_nodes) + (v,)
                    key = min(nodes, nodes[::-1])
                    if key not in found:
                        found[key] = Path(graph, key, _validate=False)
                else:
                    visit(v, depth + 1)
            stack_nodes.pop()

        for s in range(graph.node_count):
            visit(s, 0)
        paths, exhausted = _ranked_topk(found, k)
        metrics.paths_constructed[length] = len(found)
        metrics.status = "exhausted" if exhausted else "ok"
    return TopKResult(paths, exhausted, metrics)


def enumerate_all_paths(graph: WeightedGraph, length: int):
    """Every simple path of the given length, canonical, unordered."""
    return dfs_topk(graph, length, max(1, graph.node_count ** (length + 1))).paths


class _DPQuery:
    """Ranked iterator over S-avoiding paths of one length ending at one node.

    Candidates merge lazily from per-neighbor child queries; each child
    path extends by the closing edge. The merge key is (weight descending,
    canonical ascending), matching the global path order.
    """

    __slots__ = ("materialized", "heap", "done")

    def __init__(self, engine, end, length, avoid):
        graph = engine.graph
        self.materialized = []
        self.heap = []
        self.done = False
        if length == 1:
            base = []
            for x, _w in graph.adjacency[end]:
                engine.metrics.edge_reads += 1
                if x in avoid:
                    continue
                base.append(Path(graph, (x, end), _validate=False))
            base.sort(key=lambda p: (-p.weight, p.canonical_nodes, p.nodes))
            self.materialized = base
            self.done = True
            return
        for y, _w in graph.adjacency[end]:
            engine.metrics.edge_reads += 1
            if y in avoid:
                continue
            child_key = (y, length - 1, avoid | {y})
            first = engine.pull(child_key, 0)
            if first is not None:
                cand = self._compose(engine, first, end)
                heapq.heappush(
                    self.heap, (-cand.weight, cand.canonical_nodes, cand.nodes, child_key, 0, cand)
                )

    @staticmethod
    def _compose(engine, child_path, end):
        engine.metrics.joins += 1
        return Path(engine.graph, child_path.nodes + (end,), _validate=False)

    def ensure(self, engine, index, end):
        while len(self.materialized) <= index and self.heap:
            _negw, _canon, _nodes, child_key, pos, cand = heapq.heappop(self.heap)
            self.materialized.append(cand)
            nxt = engine.pull(child_key, pos + 1)
            if nxt is not None:
                cand2 = self._compose(engine, nxt, end)
                heapq.heappush(
                    self.heap,
                    (-cand2.weight, cand2.canonical_nodes, cand2.nodes, child_key, pos + 1, cand2),
                )
        if not self.heap:
            self.done = True


class _DPEngine:
    def __init__(self, graph, state_limit, metrics):
        self.graph = graph
        self.state_limit = state_limit
        self.metrics = metrics
        self.queries = {}

    def pull(self, key, index):
        """index-th ranked path for a (end, length, avoid) sub-query, or None."""
        end, length, avoid = key
        query = self.queries.get(key)
        if query is None:
            if len(self.queries) >= self.state_limit:
                raise ResourceLimitError(
                    f"dynamic program exceeded {self.state_limit} avoidance states"
                )
            # placeholder first: construction recurses into child pulls
            self.queries[key] = query = _DPQuery(self, end, length, avoid)
        if length > 1:
            query.ensure(self, index, end)
        if index < len(query.materialized):
            return query.materialized[index]
        return None


def dp_topk(
    graph: WeightedGraph,
    length: int,
    k: int,
    *,
    state_limit: int = 10_000_000,
    metrics: RunMetrics = None,
) -> TopKResult:
    """Top-k heaviest simple paths via ranked avoidance-set sub-queries.

    Output contract identical to dfs_topk. Intended for small instances;
    the memo table is capped at state_limit keys.

    Raises:
        ResourceLimitError: the avoidance-state cap was exceeded.
    """
    if length < 1 or k < 1:
        raise ValueError("length and k must be >= 1")
    metrics = metrics if metrics is not None else RunMetrics()
    metrics.algo = metrics.algo or "dp"
    metrics.length, metrics.k = length, k
    with stopwatch(metrics):
        engine = _DPEngine(graph, state_limit, metrics)
        heap = []
        for j in range(graph.node_count):
            key = (j, length, frozenset((j,)))
            first = engine.pull(key, 0)
            if first is not None:
                heapq.heappush(heap, (-first.weight, first.canonical_nodes, first.nodes, key, 0))

        pool = []
        seen = set()
        kth_weight = None
        while heap:
            negw, canon, _nodes, key, pos = heapq.heappop(heap)
            if kth_weight is not None and -negw < kth_weight:
                break
            if canon not in seen:
                seen.add(canon)
                pool.append(Path(graph, canon, _validate=False))
                if len(pool) == k:
                    kth_weight = -negw
            nxt = engine.pull(key, pos + 1)
            if nxt is not None:
                heapq.heappush(heap, (-nxt.weight, nxt.canonical_nodes, nxt.nodes, key, pos + 1))

        pool.sort(key=Path.sort_key)
        paths = pool[:k]
        exhausted = len(paths) < k
        metrics.paths_constructed[length] = len(pool)
        metrics.status = "exhausted" if exhausted else "ok"
    return TopKResult(paths, exhausted, metrics)


def greedy_path(graph: WeightedGraph, length: int, *, metrics: RunMetrics = None) -> GreedyResult:
    """Grow one heavy path by always taking the heaviest cycle-free edge.

    Seeds are tried in sorted-edge order. From a seed edge the path grows
    at whichever end offers the heaviest cycle-free edge (ties: right end
    first, then edge key). A dead end before the target length restarts
    from the next seed; failure after all seeds is a value, not an error.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    metrics = metrics if metrics is not None else RunMetrics()
    metrics.algo = metrics.algo or "greedy"
    metrics.length, metrics.k = length, 1
    with stopwatch(metrics):
        attempts = 0
        for u, v, _w in sorted_edges(graph):
            attempts += 1
            metrics.edge_reads += 1
            path = Path(graph, (u, v), _validate=False)
            while path.length < length:
                best = None
                best_step = None
                for end_order, end in ((0, "right"), (1, "left")):
                    anchor = path.nodes[-1] if end == "right" else path.nodes[0]
                    for nbr, w in graph.adjacency[anchor]:
                        metrics.edge_reads += 1
                        if nbr in path.nodes:
                            continue
                        key = (anchor, nbr) if anchor < nbr else (nbr, anchor)
                        rank = (-w, end_order, key)
                        if best is None or rank < best:
                            best = rank
                            best_step = (nbr, end)
                if best_step is None:
                    break
                path = extend(graph, path, best_step[0], best_step[1])
                metrics.joins += 1
            if path.length == length:
                metrics.restarts = attempts - 1
                metrics.paths_constructed[length] = 1
                metrics.status = "ok"
                return GreedyResult(path, attempts - 1, metrics)
        metrics.restarts = max(0, attempts - 1)
        metrics.status = "exhausted"
    return GreedyResult(None, metrics.restarts, metrics)
