"""Visualization data: the five edge-weight buckets and cross-layer usage."""

from __future__ import annotations

import math

from archrec.clustering.partition import Partition
from archrec.ingest.depgraph import SideEdge
from archrec.similarity.combine import ExtendedDependenceGraph

_BUCKET_WIDTH = 0.2
_EPS = 1e-12


def bucket_edge(w: float) -> int | None:
    """Map a combined weight to buckets (0,0.2]->1 ... (0.8,1]->5.

    Zero-weight pairs draw no edge (None)."""
    if not 0.0 <= w <= 1.0:
        raise ValueError(f"weight outside [0,1]: {w}")
    if w == 0.0:
        return None
    return min(5, math.ceil(w / _BUCKET_WIDTH - _EPS))


def viz_edges(g: ExtendedDependenceGraph) -> list[tuple[int, int, float, int]]:
    """All nonzero pairs with their bucket, heaviest first."""
    return [(u, v, w, bucket_edge(w)) for u, v, w in g.edge_list()]


def cross_layer_usage(
    p: Partition, side_edges: list[SideEdge]
) -> dict[int, dict[str, list[str]]]:
    """Per cluster, the scoped-out classes its members call, grouped by layer."""
    usage: dict[int, dict[str, set[str]]] = {}
    for e in side_edges:
        cluster = int(p.assignment[e.caller])
        usage.setdefault(cluster, {}).setdefault(e.layer, set()).add(e.callee_name)
    return {
        cluster: {layer: sorted(names) for layer, names in sorted(layers.items())}
        for cluster, layers in sorted(usage.items())
    }
