"""Buffered best-first construction of heavy paths with per-length
thresholds, plus the memory-bounded takeover heuristic.

The run keeps one buffer of candidate paths per length from 2 up to the
target. Level 1 is sorted access over the edge list; every returned
length-(l-1) path is extended at both ends by random access, and a
length-l path leaves its buffer only once it outweighs the threshold
bounding every length-l path that could still appear. Thresholds:

  * theta_l starts at w_max * l;
  * theta_2 is overwritten to twice the latest sorted-access weight;
  * theta_{l+1} becomes max(B_l.top_score, theta_l) + w_max right after a
    length-l path is returned.

Once the edge list is exhausted a threshold can no longer drop, so
remaining buffer contents are flushed in order; that keeps the run total
on finite graphs.

The random access strategy (ra_strategy) admits an extension edge only if
it is no heavier than the path's opposite-end edge, so every path is
created through its heavier sub-path: with all-distinct edge weights each
path is composed exactly once, and never more than twice otherwise.

When a capacity C is set, the run switches to the greedy takeover as soon
as the buffers collectively hold C paths and a new one arrives: buffer
tops are drained and extended at both ends (strategy deliberately off) and
dead ends fall back to the longest non-empty buffer. The result carries
the empirical ratio rho = weight / U, where U stitches the known
heaviest-by-length weights into a pessimistic bound for the target length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import SortedEdgeList
from .metrics import RunMetrics, ThresholdTrace, stopwatch
from .paths import NEG_INF, Path, PathBuffer, ThresholdState
from .results import ResourceLimitError, TopKResult


class HeuristicFailure(RuntimeError):
    """No full-length path is reachable from the stored buffer state."""


class _CapacityHit(Exception):
    """Internal: buffers are full and a new path wants in."""


@dataclass
class HeuristicResult:
    """Takeover output: the path found, rho = path.weight / u_ell, and the
    pessimistic bound u_ell stitched at takeover index j."""

    path: Path
    rho: float
    u_ell: float
    j: int


def stitched_upper_bound(u_of, j: int, length: int) -> float:
    """Pessimistic weight bound for `length` from per-length optima.

    With segment = j-1 the longest length whose optimum is known, any path
    of the target length splits into q = length // segment full segments
    plus a remainder r, so its weight is at most U_segment*q + U_r (the
    remainder term drops out when r == 0). u_of(l) must return the known
    bound for l <= segment, with u_of(1) = w_max.
    """
    segment = j - 1
    q, r = divmod(length, segment)
    if r > 0:
        return u_of(segment) * q + u_of(r)
    return u_of(segment) * q


def ra_admissible(graph, path: Path, edge_weight: float, end: str, enabled: bool = True) -> bool:
    """Random-access filter: admit an extension only if the new edge is no
    heavier than the edge at the path's opposite end.

    With the strategy disabled every extension is admissible. Equality is
    admitted, which is what allows (and bounds) duplicate creation.
    """
    if not enabled:
        return True
    left_w, right_w = path.end_edge_weights(graph)
    if end == "right":
        return edge_weight <= left_w
    if end == "left":
        return edge_weight <= right_w
    raise ValueError(f"end must be 'left' or 'right', got {end!r}")


class HeavyPathRun:
    """Single-owner solver state; one instance per run, not shareable."""

    def __init__(
        self,
        edge_list: SortedEdgeList,
        length: int,
        *,
        ra_strategy: bool = True,
        capacity: int = None,
        metrics: RunMetrics = None,
        trace: ThresholdTrace = None,
        event_log: list = None,
    ):
        if length < 2:
            raise ValueError("HeavyPathRun needs length >= 2")
        self.graph = edge_list.graph
        self.length = length
        self.ra_strategy = ra_strategy
        self.capacity = capacity
        self.metrics = metrics if metrics is not None else RunMetrics()
        self.trace = trace
        self.event_log = event_log
        self.cursor = edge_list.reader()
        self.w_max = self.graph.w_max if self.graph.w_max is not None else 0.0
        self.buffers = {l: PathBuffer(l) for l in range(2, length + 1)}
        self.thresholds = ThresholdState()
        for l in range(2, length + 1):
            self.thresholds.set(l, self.w_max * l)
        self.first_return_weight = {}
        self.stored_total = 0
        self._exhausted_levels = set()
        self._in_heuristic = False

    # -- threshold + buffer bookkeeping

    def _set_theta(self, l, value, trigger):
        self.thresholds.set(l, value)
        if self.trace is not None:
            self.trace.record(l, value, trigger)
        if self.event_log is not None:
            self.event_log.append(("theta", l, value))

    def _store(self, path: Path, l: int):
        buf = self.buffers[l]
        self.metrics.joins += 1
        self.metrics.record_creation(path.canonical_nodes)
        if buf.has_seen(path):
            self.metrics.duplicates_discarded += 1
            return
        if (
            self.capacity is not None
            and not self._in_heuristic
            and self.stored_total >= self.capacity
        ):
            raise _CapacityHit()
        buf.insert(path)
        self.stored_total += 1
        self.metrics.peak_stored_paths = max(self.metrics.peak_stored_paths, self.stored_total)
        self.metrics.paths_constructed[l] += 1
        if self.event_log is not None:
            self.event_log.append(("insert", l, path.canonical_nodes))

    def _extend_returned(self, path: Path, l: int):
        """Random accesses at both ends of a returned length-(l-1) path."""
        graph = self.graph
        nodes = path.nodes
        left_w = graph.weight(nodes[0], nodes[1])
        right_w = graph.weight(nodes[-2], nodes[-1])
        for nbr, w in graph.adjacency[nodes[0]]:
            self.metrics.edge_reads += 1
            if nbr in nodes:
                continue
            if self.ra_strategy and not self._in_heuristic and w > right_w:
                continue
            self._store(Path(graph, (nbr,) + nodes, _validate=False), l)
        for nbr, w in graph.adjacency[nodes[-1]]:
            self.metrics.edge_reads += 1
            if nbr in nodes:
                continue
            if self.ra_strategy and not self._in_heuristic and w > left_w:
                continue
            self._store(Path(graph, nodes + (nbr,), _validate=False), l)

    def _level_exhausted(self, l) -> bool:
        if l == 1:
            return self.cursor.exhausted
        return l in self._exhausted_levels

    # -- the recursive producer

    def next_heavy_path(self, l: int):
        """Next heaviest length-l path, or None once the space is exhausted.

        Successive calls at the same level return non-increasing weights
        (ties by canonical sequence).
        """
        if l == 1:
            entry = self.cursor.read()
            if entry is None:
                return None
            self.metrics.edge_reads += 1
            self.metrics.depth = self.cursor.depth
            u, v, w = entry
            self._set_theta(2, 2 * w, ThresholdTrace.SORTED_ACCESS)
            return Path(self.graph, (u, v), _validate=False)

        buf = self.buffers[l]
        while buf.top_score <= self.thresholds.get(l):
            if self._level_exhausted(l - 1):
                break
            shorter = self.next_heavy_path(l - 1)
            if shorter is None:
                break
            self._extend_returned(shorter, l)
        if not len(buf):
            self._exhausted_levels.add(l)
            return None
        path = buf.remove_top_path()
        self.stored_total -= 1
        self.first_return_weight.setdefault(l, path.weight)
        if self.event_log is not None:
            self.event_log.append(("return", l, path.canonical_nodes))
        if l < self.length:
            new_theta = max(buf.top_score, self.thresholds.get(l)) + self.w_max
            self._set_theta(l + 1, new_theta, ThresholdTrace.PATH_RETURN)
        return path

    # -- memory-bounded takeover

    def upper_bound_for(self, l: int) -> float:
        """Heaviest-possible weight at length l from what the run proved.

        U_1 is w_max; for lengths whose heaviest path was already returned
        it is that weight.
        """
        if l == 1:
            return self.w_max
        return self.first_return_weight[l]

    def run_heuristic(self) -> HeuristicResult:
        """Greedy drain of the buffers into a full-length path (Algorithm
        of the capacity takeover); see module docstring.

        Raises:
            HeuristicFailure: every buffer emptied without reaching the
                target length.
        """
        self._in_heuristic = True
        non_empty = [l for l in range(2, self.length + 1) if len(self.buffers[l])]
        if not non_empty:
            raise HeuristicFailure(
                "capacity takeover with empty buffers: no stored state to extend"
            )
        j = max(non_empty)
        i = j
        while i < self.length:
            top = self.buffers[i].remove_top_path()
            self.stored_total -= 1
            self._extend_returned(top, i + 1)
            non_empty = [l for l in range(2, self.length + 1) if len(self.buffers[l])]
            if not non_empty:
                raise HeuristicFailure(
                    f"no simple length-{self.length} path is reachable from the buffers"
                )
            i = max(non_empty)

        u_ell = stitched_upper_bound(self.upper_bound_for, j, self.length)
        target = self.buffers[self.length]
        rho = target.top_score / u_ell
        path = target.remove_top_path()
        self.stored_total -= 1
        return HeuristicResult(path=path, rho=rho, u_ell=u_ell, j=j)


def heavy_path_heuristic(run: HeavyPathRun) -> HeuristicResult:
    """Run the capacity takeover on an existing run's buffer state."""
    return run.run_heuristic()


def heavy_path_topk(
    edge_list: SortedEdgeList,
    length: int,
    k: int,
    *,
    ra_strategy: bool = True,
    capacity: int = None,
    heuristic_on_capacity: bool = True,
    metrics: RunMetrics = None,
    trace: ThresholdTrace = None,
    event_log: list = None,
) -> TopKResult:
    """Top-k heaviest length-`length` paths via the buffered run.

    Output contract matches dfs_topk. length 1 is answered directly from
    the sorted edge list. If a capacity is set and the buffers fill up,
    the run switches to the takeover heuristic (result carries the
    HeuristicResult) unless heuristic_on_capacity is False, in which case
    ResourceLimitError is raised.
    """
    if length < 1 or k < 1:
        raise ValueError("length and k must be >= 1")
    graph = edge_list.graph
    metrics = metrics if metrics is not None else RunMetrics()
    metrics.algo = metrics.algo or "heavypath"
    metrics.length, metrics.k = length, k
    metrics.ra_strategy = metrics.ra_strategy or ("on" if ra_strategy else "off")
    metrics.capacity = capacity

    with stopwatch(metrics):
        if length == 1:
            cursor = edge_list.reader()
            paths = []
            while len(paths) < k:
                entry = cursor.read()
                if entry is None:
                    break
                metrics.edge_reads += 1
                metrics.depth = cursor.depth
                paths.append(Path(graph, entry[:2], _validate=False))
            exhausted = len(paths) < k
            metrics.status = "exhausted" if exhausted else "ok"
            return TopKResult(paths, exhausted, metrics)

        run = HeavyPathRun(
            edge_list,
            length,
            ra_strategy=ra_strategy,
            capacity=capacity,
            metrics=metrics,
            trace=trace,
            event_log=event_log,
        )
        results = []
        try:
            while len(results) < k:
                path = run.next_heavy_path(length)
                if path is None:
                    break
                results.append(path)
        except _CapacityHit:
            if not heuristic_on_capacity:
                metrics.status = "error"
                raise ResourceLimitError(
                    f"buffers exceeded capacity {capacity} before the exact answer"
                ) from None
            heuristic = run.run_heuristic()
            if all(p.canonical_nodes != heuristic.path.canonical_nodes for p in results):
                results.append(heuristic.path)
            metrics.status = "heuristic"
            return TopKResult(results, len(results) < k, metrics, heuristic=heuristic)
        exhausted = len(results) < k
        metrics.status = "exhausted" if exhausted else "ok"
        return TopKResult(results, exhausted, metrics)
