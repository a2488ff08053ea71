"""Path values, cycle-safe extension, and the per-length path buffer.

A Path is an immutable simple node sequence with its weight cached. The
weight is always computed by left-to-right summation over the canonical
orientation (the lexicographically smaller of the sequence and its
reversal), so a path reached through different join orders carries a
bit-identical weight and compares equal everywhere.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

NEG_INF = float("-inf")


class Path:
    """Simple path: distinct nodes, consecutive nodes adjacent in the graph."""

    __slots__ = ("nodes", "canonical_nodes", "weight")

    def __init__(self, graph, nodes, _validate: bool = True):
        nodes = tuple(nodes)
        if _validate:
            if len(nodes) < 2:
                raise ValueError("a path needs at least one edge")
            if len(set(nodes)) != len(nodes):
                raise ValueError(f"repeated node in {nodes}")
        reversed_nodes = nodes[::-1]
        canonical = nodes if nodes <= reversed_nodes else reversed_nodes
        weight = 0.0
        for i in range(len(canonical) - 1):
            # raises KeyError if consecutive nodes are not adjacent
            weight += graph.weight(canonical[i], canonical[i + 1])
        self.nodes = nodes
        self.canonical_nodes = canonical
        self.weight = weight

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.nodes) - 1

    def canonical(self, graph) -> "Path":
        """This path in canonical orientation (same weight, idempotent)."""
        if self.nodes == self.canonical_nodes:
            return self
        return Path(graph, self.canonical_nodes, _validate=False)

    def sort_key(self):
        """Global ordering: weight descending, canonical sequence ascending."""
        return (-self.weight, self.canonical_nodes)

    def end_edge_weights(self, graph):
        """(leftmost edge weight, rightmost edge weight) in self.nodes order."""
        return (
            graph.weight(self.nodes[0], self.nodes[1]),
            graph.weight(self.nodes[-2], self.nodes[-1]),
        )

    def serialize(self, graph) -> str:
        """``weight<TAB>v0,v1,...`` with repr weight, canonical orientation."""
        labels = graph.label_path(self.canonical_nodes)
        return f"{self.weight!r}\t{','.join(str(l) for l in labels)}"

    def __eq__(self, other):
        return isinstance(other, Path) and self.canonical_nodes == other.canonical_nodes

    def __hash__(self):
        return hash(self.canonical_nodes)

    def __repr__(self):
        return f"Path({'-'.join(map(str, self.nodes))}, w={self.weight!r})"


def canonical(graph, path: Path) -> Path:
    """Canonical form of a path: the lexicographically smaller orientation."""
    return path.canonical(graph)


def extend(graph, path: Path, neighbor: int, end: str):
    """Grow a path by one edge at the chosen end.

    Args:
        graph: the graph supplying edge weights.
        path: path to extend.
        neighbor: the far endpoint of the appended edge.
        end: "left" (prepend) or "right" (append).

    Returns:
        The longer Path, or None when the neighbor already occurs on the
        path (cycle rejection is a value, not an error).

    Raises:
        ValueError: the edge is not incident to the chosen end.
    """
    if end == "right":
        anchor = path.nodes[-1]
    elif end == "left":
        anchor = path.nodes[0]
    else:
        raise ValueError(f"end must be 'left' or 'right', got {end!r}")
    if not graph.has_edge(anchor, neighbor):
        raise ValueError(f"no edge ({anchor},{neighbor}) incident to the {end} end")
    if neighbor in path.nodes:
        return None
    if end == "right":
        return Path(graph, path.nodes + (neighbor,), _validate=False)
    return Path(graph, (neighbor,) + path.nodes, _validate=False)


class PathBuffer:
    """Duplicate-free store of same-length paths, heaviest first.

    Ordering is (weight descending, canonical sequence ascending). The
    buffer remembers every canonical key it ever accepted, so a path that
    was removed cannot be re-inserted; re-derivations always report as
    duplicates. That keeps top-k output duplicate-free and guarantees the
    heuristic's drain loop terminates.
    """

    def __init__(self, length: int):
        self.length = length
        self._heap = []
        self._seen = set()

    def __len__(self):
        return len(self._heap)

    def insert(self, path: Path) -> bool:
        """Store a path; returns False (duplicate) if its canonical form was ever seen.

        Raises:
            ValueError: path length differs from the buffer's length.
        """
        if path.length != self.length:
            raise ValueError(f"buffer holds length-{self.length} paths, got length {path.length}")
        key = path.canonical_nodes
        if key in self._seen:
            return False
        self._seen.add(key)
        heapq.heappush(self._heap, (-path.weight, key, path))
        return True

    def has_seen(self, path: Path) -> bool:
        """True if this canonical form was ever accepted (even if removed since)."""
        return path.canonical_nodes in self._seen

    @property
    def top_score(self) -> float:
        """Weight of the heaviest stored path, -inf when empty."""
        if not self._heap:
            return NEG_INF
        return -self._heap[0][0]

    def remove_top_path(self) -> Path:
        """Pop the (weight, tie-break)-first path.

        Raises:
            ValueError: the buffer is empty.
        """
        if not self._heap:
            raise ValueError("remove_top_path on an empty buffer")
        return heapq.heappop(self._heap)[2]


@dataclass
class ThresholdState:
    """Per-length upper bounds on the weight of not-yet-producible paths."""

    values: dict = field(default_factory=dict)

    def get(self, length: int) -> float:
        return self.values[length]

    def set(self, length: int, value: float):
        self.values[length] = value
