"""Multi-way rank self-join over the sorted edge list.

Edges arrive under sorted access. Each new edge is composed with the
already-seen edges into every simple path of the target length that
contains it; the conservative stopping threshold w_d + (len-1)*w_max
bounds the weight of any future result.

Partials that provably cannot reach the target length (neither end has an
off-path neighbor anywhere in the graph) are skipped before composing, so
dead fan-outs cost edge reads but no join. Shorter segments are not kept
across sorted accesses; they are recomposed whenever a later edge needs
them.
"""

from __future__ import annotations

from bisect import insort

from .graph import SortedEdgeList
from .metrics import RunMetrics, ThresholdTrace, stopwatch
from .paths import Path
from .results import ResourceLimitError, TopKResult


def _canonical_key(nodes):
    rev = nodes[::-1]
    return nodes if nodes <= rev else rev


def _can_still_grow(graph, nodes, node_set):
    """True if some end node has a graph neighbor off the partial path."""
    for end in (nodes[0], nodes[-1]):
        for nb in graph.neighbor_set(end):
            if nb not in node_set:
                return True
    return False


def rank_join_topk(
    edge_list: SortedEdgeList,
    length: int,
    k: int,
    *,
    constructed_cap: int = None,
    metrics: RunMetrics = None,
    trace: ThresholdTrace = None,
    event_log: list = None,
) -> TopKResult:
    """Top-k heaviest length-`length` paths by incremental rank join.

    Halts as soon as k results weigh at least the current threshold, or
    when the edge list is exhausted (then whatever exists is returned and
    the exhausted flag is set).

    Raises:
        ResourceLimitError: more than constructed_cap distinct result
            paths were materialized.
    """
    if length < 1 or k < 1:
        raise ValueError("length and k must be >= 1")
    graph = edge_list.graph
    metrics = metrics if metrics is not None else RunMetrics()
    metrics.algo = metrics.algo or "rankjoin"
    metrics.length, metrics.k = length, k

    with stopwatch(metrics):
        cursor = edge_list.reader()
        w_max = graph.w_max
        seen_adj = [[] for _ in range(graph.node_count)]
        result_keys = set()
        ranked = []  # (sort_key, Path), ascending = heaviest first
        stopped = False

        while not stopped:
            entry = cursor.read()
            if entry is None:
                break
            metrics.edge_reads += 1
            metrics.depth = cursor.depth
            u, v, w = entry
            seen_adj[u].append((v, w))
            seen_adj[v].append((u, w))
            theta = w + (length - 1) * w_max
            if trace is not None:
                trace.record(length, theta, ThresholdTrace.SORTED_ACCESS)
            if event_log is not None:
                event_log.append(("theta", length, theta))

            def accept(path):
                key = path.canonical_nodes
                if key in result_keys:
                    metrics.duplicates_discarded += 1
                    return
                result_keys.add(key)
                metrics.paths_constructed[length] += 1
                if constructed_cap is not None and len(result_keys) > constructed_cap:
                    metrics.status = "error"
                    raise ResourceLimitError(
                        f"rank join constructed more than {constructed_cap} paths"
                    )
                insort(ranked, (path.sort_key(), path))
                if len(ranked) > k:
                    ranked.pop()
                metrics.peak_stored_paths = max(metrics.peak_stored_paths, len(ranked))
                if event_log is not None:
                    event_log.append(("insert", length, key))

            if length == 1:
                accept(Path(graph, (u, v), _validate=False))
            else:
                frontier = [(u, v)]
                for depth in range(2, length + 1):
                    layer = {}
                    at_target = depth == length
                    for nodes in frontier:
                        node_set = set(nodes)
                        for at_left in (True, False):
                            anchor = nodes[0] if at_left else nodes[-1]
                            for nbr, _wn in seen_adj[anchor]:
                                metrics.edge_reads += 1
                                if nbr in node_set:
                                    continue
                                grown = (nbr,) + nodes if at_left else nodes + (nbr,)
                                if not at_target and not _can_still_grow(
                                    graph, grown, node_set | {nbr}
                                ):
                                    continue
                                metrics.joins += 1
                                if at_target:
                                    path = Path(graph, grown, _validate=False)
                                    metrics.record_creation(path.canonical_nodes)
                                    accept(path)
                                else:
                                    key = _canonical_key(grown)
                                    if key in layer:
                                        metrics.duplicates_discarded += 1
                                    else:
                                        layer[key] = grown
                    frontier = list(layer.values())

            if len(ranked) >= k and ranked[k - 1][1].weight >= theta:
                stopped = True

        paths = [p for _, p in ranked[:k]]
        exhausted = len(paths) < k
        metrics.status = "exhausted" if exhausted else "ok"
    return TopKResult(paths, exhausted, metrics)


def rank_join_depth_probe(edge_list: SortedEdgeList, length: int) -> int:
    """Sorted-access depth at which the top-1 run terminates."""
    result = rank_join_topk(edge_list, length, 1)
    return result.metrics.depth
