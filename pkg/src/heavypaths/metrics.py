"""Run instrumentation: counters, threshold-decay traces, CSV reporting.

Counting conventions:
  * edge_reads: every edge delivered by sorted access, a random-access
    adjacency scan, or a join-time index lookup counts one; lookups that
    return nothing count zero.
  * joins: every successful composition of a path with an edge, including
    compositions later discarded as duplicates or pruned from the top-k.
  * paths_constructed: distinct stored paths, kept per length; solvers
    that only materialize full-length results report just that length.
  * creation_counts: per canonical path, how many times it was composed
    (feeds the duplicate-bound checks).

Metrics are observers: recording them never alters solver results.
"""

from __future__ import annotations

import csv
import time
from collections import Counter
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional

METRICS_HEADER = [
    "algo", "instance", "length", "k", "ra_strategy", "capacity",
    "edge_reads", "joins", "paths_constructed", "duplicates_discarded",
    "depth", "peak_stored_paths", "wall_ms", "status",
]

TRACE_HEADER = ["event", "l", "theta", "trigger"]


@dataclass
class RunMetrics:
    algo: str = ""
    instance: str = ""
    length: int = 0
    k: int = 0
    ra_strategy: str = ""
    capacity: Optional[int] = None
    edge_reads: int = 0
    joins: int = 0
    paths_constructed: Counter = field(default_factory=Counter)
    duplicates_discarded: int = 0
    depth: int = 0
    peak_stored_paths: int = 0
    wall_ms: Optional[float] = None
    status: str = ""
    restarts: int = 0
    creation_counts: Counter = field(default_factory=Counter)

    @property
    def total_paths_constructed(self) -> int:
        return sum(self.paths_constructed.values())

    def record_creation(self, canonical_nodes):
        self.creation_counts[canonical_nodes] += 1

    def csv_row(self):
        return [
            self.algo,
            self.instance,
            self.length,
            self.k,
            self.ra_strategy,
            "" if self.capacity is None else self.capacity,
            self.edge_reads,
            self.joins,
            self.total_paths_constructed,
            self.duplicates_discarded,
            self.depth,
            self.peak_stored_paths,
            "" if self.wall_ms is None else repr(self.wall_ms),
            self.status,
        ]


@contextmanager
def stopwatch(run_metrics: RunMetrics):
    """Fill run_metrics.wall_ms with the elapsed time of the with-block."""
    start = time.perf_counter()
    try:
        yield run_metrics
    finally:
        run_metrics.wall_ms = (time.perf_counter() - start) * 1000.0


class ThresholdTrace:
    """Ordered θ-update log: (event index, length, θ value, trigger)."""

    SORTED_ACCESS = "sorted-access"
    PATH_RETURN = "path-return"

    def __init__(self):
        self.rows = []

    def record(self, length: int, theta: float, trigger: str):
        self.rows.append((len(self.rows), length, theta, trigger))

    def values_for(self, length: int):
        return [theta for _, l, theta, _ in self.rows if l == length]

    def __len__(self):
        return len(self.rows)


def write_metrics_csv(path: str, runs) -> None:
    """Write one row per RunMetrics under the fixed header."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(METRICS_HEADER)
        for m in runs:
            writer.writerow(m.csv_row())


def read_metrics_csv(path: str):
    """Rows as dicts with counters parsed back to exact ints."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.DictReader(fh))
    for row in rows:
        for key in ("length", "k", "edge_reads", "joins", "paths_constructed",
                    "duplicates_discarded", "depth", "peak_stored_paths"):
            row[key] = int(row[key])
        row["capacity"] = int(row["capacity"]) if row["capacity"] != "" else None
        row["wall_ms"] = float(row["wall_ms"]) if row["wall_ms"] != "" else None
    return rows


def write_trace_csv(path: str, trace: ThresholdTrace) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(TRACE_HEADER)
        for event, l, theta, trigger in trace.rows:
            writer.writerow([event, l, repr(theta), trigger])


def read_trace_csv(path: str):
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [(int(r["event"]), int(r["l"]), float(r["theta"]), r["trigger"]) for r in rows]
