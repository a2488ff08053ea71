"""Synthetic instance generators.

Both generators are deterministic: fig3 is fully fixed by n, and the random
generator is fixed by its seed, so emitted edge-list files are byte-stable.
"""

from __future__ import annotations

import random

from .graph import GraphError, WeightedGraph

# fig3 chain weights: one dominant chain and n decoy fan paths that rank
# join must grind through before the lightest chain edge surfaces.
_TOP_CHAIN = (1.0, 1.0, 0.001)
_DECOY_PREFIX = (0.03, 0.02)
_FAN_WEIGHT = 0.01


def generate_fig3(n: int) -> WeightedGraph:
    """Adversarial instance: one heavy 3-edge chain plus n light fan paths.

    Nodes a-b-c-d form the heavy chain (weights 1, 1, 0.001). A disjoint
    prefix ap-bp-cp (weights 0.03, 0.02) fans out to n leaves dp1..dpn with
    weight 0.01 each, so there are exactly n+1 simple length-3 paths: one of
    weight 2.001 and n of weight 0.06.

    Args:
        n: number of fan leaves, n >= 1.
    """
    if n < 1:
        raise GraphError("fig3 requires n >= 1")
    labels = ["a", "b", "c", "d", "ap", "bp", "cp"] + [f"dp{i}" for i in range(1, n + 1)]
    a, b, c, d, ap, bp, cp = range(7)
    edges = [
        (a, b, _TOP_CHAIN[0]),
        (b, c, _TOP_CHAIN[1]),
        (c, d, _TOP_CHAIN[2]),
        (ap, bp, _DECOY_PREFIX[0]),
        (bp, cp, _DECOY_PREFIX[1]),
    ]
    for i in range(n):
        edges.append((cp, 7 + i, _FAN_WEIGHT))
    return WeightedGraph(7 + n, edges, labels=labels)


def generate_random(
    node_count: int,
    edge_probability: float,
    weight_distribution: str = "uniform",
    seed: int = 0,
    distinct_weights: bool = False,
) -> WeightedGraph:
    """Erdős–Rényi-style weighted graph, deterministic per seed.

    Args:
        node_count: number of nodes.
        edge_probability: per-pair edge probability in [0, 1].
        weight_distribution: "uniform" (on (0,1)) or "exponential".
        seed: pseudo-random stream seed.
        distinct_weights: redraw ties so all weights are pairwise distinct.
    """
    if not (0 <= edge_probability <= 1):
        raise GraphError("edge_probability must lie in [0, 1]")
    if weight_distribution not in ("uniform", "exponential"):
        raise GraphError(f"unknown weight distribution {weight_distribution!r}")
    rng = random.Random(seed)

    def draw():
        if weight_distribution == "uniform":
            return rng.random()
        return rng.expovariate(1.0)

    used = set()
    edges = []
    for u in range(node_count):
        for v in range(u + 1, node_count):
            if rng.random() < edge_probability:
                w = draw()
                if distinct_weights:
                    while w in used:
                        w = draw()
                    used.add(w)
                edges.append((u, v, w))
    return WeightedGraph(node_count, edges)
