"""Shared solver result types and resource-guard errors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .metrics import RunMetrics
from .paths import Path


class ResourceLimitError(RuntimeError):
    """A configured state or storage cap was exceeded."""


@dataclass
class TopKResult:
    """Ranked solver output.

    paths are sorted by (weight descending, canonical sequence ascending);
    exhausted is set when fewer than k paths of the requested length exist
    (or, under heuristic takeover, when the exact enumeration was cut off).
    """

    paths: List[Path]
    exhausted: bool
    metrics: RunMetrics
    heuristic: Optional[object] = None

    def weights(self):
        return [p.weight for p in self.paths]

    def canonical_sequences(self):
        return [p.canonical_nodes for p in self.paths]


@dataclass
class GreedyResult:
    """Greedy construction outcome; failure is a value (path=None)."""

    path: Optional[Path]
    restarts: int
    metrics: RunMetrics
