"""Immutable weighted-graph model and the weight-sorted edge view.

Graphs are undirected, simple (no self-loops, no parallel edges) and carry
non-negative real edge weights. Every edge is stored once under its
normalized key (u, v) with u < v, where u and v are dense integer node ids.
Original node labels are kept in a side table for input/output.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid graph input."""


class WeightedGraph:
    """Undirected graph with non-negative edge weights.

    Immutable after construction and safe to share across concurrently
    running solver instances.

    Attributes:
        node_count: number of nodes; node ids are 0 .. node_count-1.
        edges: tuple of (u, v, w) with u < v, unique keys, w >= 0.
        labels: per-node original labels (defaults to str(id)).
        w_max / w_min: heaviest and lightest edge weight (None if edgeless).
        d_max: maximum node degree.
    """

    def __init__(self, node_count: int, edges: Iterable[tuple], labels: Optional[Sequence] = None):
        if node_count < 0:
            raise GraphError("node_count must be non-negative")
        self.node_count = node_count
        seen = {}
        normalized = []
        for u, v, w in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphError(f"edge ({u},{v}) references unknown node")
            if u == v:
                raise GraphError(f"self-loop on node {u}")
            if w < 0:
                raise GraphError(f"negative weight {w} on edge ({u},{v})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen[key] = float(w)
            normalized.append((key[0], key[1], float(w)))
        normalized.sort(key=lambda e: (e[0], e[1]))
        self.edges = tuple(normalized)
        self._weights = seen
        if labels is None:
            labels = [str(i) for i in range(node_count)]
        if len(labels) != node_count:
            raise GraphError("labels length must equal node_count")
        self.labels = tuple(labels)

        adjacency = [[] for _ in range(node_count)]
        for u, v, w in self.edges:
            adjacency[u].append((v, w))
            adjacency[v].append((u, w))
        # heaviest first, neighbor id breaking ties: deterministic scan order
        for lst in adjacency:
            lst.sort(key=lambda nw: (-nw[1], nw[0]))
        self.adjacency = tuple(tuple(lst) for lst in adjacency)
        self._adj_sets = tuple(frozenset(n for n, _ in lst) for lst in adjacency)

        if self.edges:
            ws = [w for _, _, w in self.edges]
            self.w_max = max(ws)
            self.w_min = min(ws)
        else:
            self.w_max = None
            self.w_min = None
        self.d_max = max((len(a) for a in self.adjacency), default=0)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def weight(self, u: int, v: int) -> float:
        key = (u, v) if u < v else (v, u)
        return self._weights[key]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u] if 0 <= u < self.node_count else False

    def neighbors(self, u: int):
        """(neighbor, weight) pairs, heaviest first."""
        return self.adjacency[u]

    def neighbor_set(self, u: int) -> frozenset:
        return self._adj_sets[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def label_path(self, nodes: Iterable[int]) -> tuple:
        return tuple(self.labels[n] for n in nodes)

    def __repr__(self):
        return f"WeightedGraph(nodes={self.node_count}, edges={self.edge_count})"


class EdgeCursor:
    """Sorted-access state over a SortedEdgeList.

    Tracks the depth d (number of edges read) and w_d, the weight at the
    cursor. One cursor per solver run; the underlying list is shared.
    """

    def __init__(self, edge_list: "SortedEdgeList"):
        self._entries = edge_list.entries
        self.depth = 0
        self.last_weight = None

    def read(self):
        """Next edge in non-increasing weight order, or None when exhausted."""
        if self.depth >= len(self._entries):
            return None
        entry = self._entries[self.depth]
        self.depth += 1
        self.last_weight = entry[2]
        return entry

    @property
    def exhausted(self) -> bool:
        return self.depth >= len(self._entries)


class SortedEdgeList:
    """The graph's edges in non-increasing weight order.

    Ties are ordered by normalized edge key ascending, so the order is a
    deterministic permutation of the edge set. Immutable; per-run sorted
    access goes through reader().
    """

    def __init__(self, graph: WeightedGraph):
        self.graph = graph
        self.entries = tuple(sorted(graph.edges, key=lambda e: (-e[2], e[0], e[1])))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def reader(self) -> EdgeCursor:
        return EdgeCursor(self)


def sorted_edges(graph: WeightedGraph) -> SortedEdgeList:
    """Weight-sorted edge view of the graph (cursor starts at depth 0)."""
    return SortedEdgeList(graph)


def normalize_for_lightest(graph: WeightedGraph) -> WeightedGraph:
    """Flip weights so lightest-path queries become heaviest-path queries.

    Each weight w becomes 1 - w/w_max; the heaviest edge maps to 0 and a
    zero-weight edge maps to 1. Topology and labels are preserved.

    Raises:
        GraphError: if the graph has no edges (w_max undefined).
    """
    if not graph.edges:
        raise GraphError("cannot normalize an edgeless graph")
    w_max = graph.w_max
    if w_max <= 0:
        raise GraphError("normalization requires a positive maximum weight")
    edges = [(u, v, 1 - w / w_max) for u, v, w in graph.edges]
    return WeightedGraph(graph.node_count, edges, labels=graph.labels)


def dice_coefficient(count_i: int, count_j: int, count_both: int) -> float:
    """2|i∩j| / (|i|+|j|) over per-item session counts."""
    return 2 * count_both / (count_i + count_j)


def build_cooccurrence_graph(sessions: Sequence, min_weight: float = 0.1) -> WeightedGraph:
    """Build an item graph from co-occurrence sessions.

    Args:
        sessions: iterable of item-id sets; |i| counts sessions containing
            item i, |i∩j| counts sessions containing both.
        min_weight: edges with Dice coefficient below this are dropped.

    Returns:
        Graph over all items seen in any session (isolated items kept),
        labels sorted ascending, edge weight = Dice coefficient.
    """
    if not sessions:
        raise GraphError("sessions must be non-empty")
    if not (0 <= min_weight <= 1):
        raise GraphError("min_weight must lie in [0, 1]")
    item_counts = {}
    pair_counts = {}
    for session in sessions:
        items = sorted(set(session))
        for it in items:
            item_counts[it] = item_counts.get(it, 0) + 1
        for a_idx in range(len(items)):
            for b_idx in range(a_idx + 1, len(items)):
                key = (items[a_idx], items[b_idx])
                pair_counts[key] = pair_counts.get(key, 0) + 1
    labels = sorted(item_counts)
    ids = {label: i for i, label in enumerate(labels)}
    edges = []
    for (a, b), both in pair_counts.items():
        w = dice_coefficient(item_counts[a], item_counts[b], both)
        if w >= min_weight:
            edges.append((ids[a], ids[b], w))
    return WeightedGraph(len(labels), edges, labels=labels)
