"""Graph readers and writers.

Two input formats:
  * edge list: whitespace-separated ``u v w`` lines, ``#`` comments, UTF-8;
  * DIMACS shortest-path ``.gr``: ``c`` comments, one ``p sp <n> <m>``
    header, ``a u v w`` arc lines.

Node ids are assigned densely in order of first appearance (edge list) or
taken from the 1-based DIMACS header range. Original labels are preserved
for output.
"""

from __future__ import annotations

import io as _io
from typing import Iterable, TextIO, Union

from .graph import GraphError, WeightedGraph


class FormatError(GraphError):
    """Malformed input; message carries the offending line number."""


def _open_source(source: Union[str, TextIO]):
    if isinstance(source, str):
        return open(source, "r", encoding="utf-8"), True
    return source, False


def load_edge_list(source: Union[str, TextIO], on_duplicate: str = "reject") -> WeightedGraph:
    """Parse an edge-list stream or file path into a WeightedGraph.

    Args:
        source: file path or text stream of ``u v w`` lines.
        on_duplicate: "reject" errors on a repeated undirected edge,
            "keep_max" keeps the maximum weight among repeats.

    Raises:
        FormatError: malformed line, negative weight, self-loop, or a
            duplicate edge under the reject policy.
    """
    if on_duplicate not in ("reject", "keep_max"):
        raise ValueError(f"unknown duplicate policy {on_duplicate!r}")
    stream, close = _open_source(source)
    try:
        ids = {}
        labels = []
        weights = {}

        def node_id(label):
            if label not in ids:
                ids[label] = len(labels)
                labels.append(label)
            return ids[label]

        for lineno, raw in enumerate(stream, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: expected 'u v w', got {raw.strip()!r}")
            u_label, v_label, w_text = parts
            try:
                w = float(w_text)
            except ValueError:
                raise FormatError(f"line {lineno}: weight {w_text!r} is not a number") from None
            if w < 0:
                raise FormatError(f"line {lineno}: negative weight {w}")
            if u_label == v_label:
                raise FormatError(f"line {lineno}: self-loop on {u_label!r}")
            u, v = node_id(u_label), node_id(v_label)
            key = (u, v) if u < v else (v, u)
            if key in weights:
                if on_duplicate == "reject":
                    raise FormatError(f"line {lineno}: duplicate edge {u_label!r}-{v_label!r}")
                weights[key] = max(weights[key], w)
            else:
                weights[key] = w
        edges = [(u, v, w) for (u, v), w in weights.items()]
        return WeightedGraph(len(labels), edges, labels=labels)
    finally:
        if close:
            stream.close()


def load_dimacs(source: Union[str, TextIO]) -> WeightedGraph:
    """Parse a DIMACS ``.gr`` stream or path into an undirected graph.

    Reciprocal arc pairs ``a u v w`` / ``a v u w`` collapse to one edge and
    must agree on the weight.

    Raises:
        FormatError: missing/malformed header, node out of range, or
            inconsistent duplicate/reciprocal weights.
    """
    stream, close = _open_source(source)
    try:
        node_count = None
        weights = {}
        for lineno, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            parts = line.split()
            if parts[0] == "p":
                if node_count is not None:
                    raise FormatError(f"line {lineno}: duplicate problem header")
                if len(parts) != 4 or parts[1] != "sp":
                    raise FormatError(f"line {lineno}: malformed header {line!r}")
                try:
                    node_count = int(parts[2])
                    int(parts[3])
                except ValueError:
                    raise FormatError(f"line {lineno}: malformed header {line!r}") from None
                if node_count < 0:
                    raise FormatError(f"line {lineno}: negative node count")
            elif parts[0] == "a":
                if node_count is None:
                    raise FormatError(f"line {lineno}: arc before problem header")
                if len(parts) != 4:
                    raise FormatError(f"line {lineno}: malformed arc {line!r}")
                try:
                    u_label, v_label = int(parts[1]), int(parts[2])
                    w = float(parts[3])
                except ValueError:
                    raise FormatError(f"line {lineno}: malformed arc {line!r}") from None
                if not (1 <= u_label <= node_count and 1 <= v_label <= node_count):
                    raise FormatError(f"line {lineno}: node outside 1..{node_count}")
                if u_label == v_label:
                    raise FormatError(f"line {lineno}: self-loop on {u_label}")
                if w < 0:
                    raise FormatError(f"line {lineno}: negative weight {w}")
                u, v = u_label - 1, v_label - 1
                key = (u, v) if u < v else (v, u)
                if key in weights and weights[key] != w:
                    raise FormatError(
                        f"line {lineno}: arc ({u_label},{v_label}) weight {w} "
                        f"contradicts earlier weight {weights[key]}"
                    )
                weights[key] = w
            else:
                raise FormatError(f"line {lineno}: unknown record {parts[0]!r}")
        if node_count is None:
            raise FormatError("missing 'p sp' header")
        edges = [(u, v, w) for (u, v), w in weights.items()]
        labels = [str(i + 1) for i in range(node_count)]
        return WeightedGraph(node_count, edges, labels=labels)
    finally:
        if close:
            stream.close()


def write_edge_list(graph: WeightedGraph, target: Union[str, TextIO, None] = None) -> str:
    """Serialize a graph in edge-list format with round-trip weights.

    Edges are written in normalized key order; weights use repr so a
    reload reproduces them bit-exactly. Returns the text; writes it to
    ``target`` (path or stream) when given.
    """
    out = _io.StringIO()
    for u, v, w in graph.edges:
        out.write(f"{graph.labels[u]} {graph.labels[v]} {w!r}\n")
    text = out.getvalue()
    if isinstance(target, str):
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)
    elif target is not None:
        target.write(text)
    return text
