"""Detection and elimination of outlier (oversized) clusters.

Skewed cluster-size distributions (Fisher G1 > 2) trigger re-clustering at
tighter edge-weight percentiles; once the percentile is exhausted, the
remaining oversized clusters are split by repeated global minimum cuts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from archrec.clustering.partition import Partition
from archrec.clustering.seeds import cc_partition
from archrec.similarity.combine import ExtendedDependenceGraph


def skewness_g1(sizes: list[int] | list[float]) -> float:
    """Bias-corrected Fisher skewness; 0 when undefined (n < 3, no variance)."""
    x = np.asarray(sizes, dtype=float)
    n = x.size
    if n < 3:
        return 0.0
    dev = x - x.mean()
    s2 = float((dev**2).sum()) / (n - 1)
    if s2 == 0.0:
        return 0.0
    return float(n / ((n - 1) * (n - 2)) * (dev**3).sum() / s2**1.5)


def stoer_wagner_min_cut(weights: np.ndarray) -> tuple[float, set[int]]:
    """Deterministic global minimum cut of a weighted undirected graph.

    Returns (cut value, one side of the cut). Ties break toward lower
    vertex indices throughout, so results are reproducible.
    """
    m = weights.shape[0]
    if m < 2:
        raise ValueError("min cut needs at least two vertices")
    w = weights.astype(float).copy()
    np.fill_diagonal(w, 0.0)
    members: dict[int, list[int]] = {v: [v] for v in range(m)}
    active = list(range(m))
    best_value, best_side = float("inf"), {0}
    while len(active) > 1:
        order = [active[0]]
        candidates = active[1:]
        conn = {v: w[order[0], v] for v in candidates}
        while candidates:
            nxt = max(candidates, key=lambda v: (conn[v], -v))
            candidates.remove(nxt)
            order.append(nxt)
            for v in candidates:
                conn[v] += w[nxt, v]
        s, t = order[-2], order[-1]
        cut_of_phase = sum(w[t, v] for v in order[:-1])
        if cut_of_phase < best_value:
            best_value = cut_of_phase
            best_side = set(members[t])
        # merge t into s
        members[s] = members[s] + members[t]
        del members[t]
        w[s, :] += w[t, :]
        w[:, s] += w[:, t]
        w[s, s] = 0.0
        active.remove(t)
    return best_value, best_side


def _split_oversized(
    cluster: set[int], g: ExtendedDependenceGraph, max_size: float
) -> list[set[int]]:
    """Split a cluster by repeated minimum cuts until all parts fit."""
    parts: list[set[int]] = []
    stack = [sorted(cluster)]
    while stack:
        part = stack.pop()
        if len(part) <= max_size or len(part) < 2:
            parts.append(set(part))
            continue
        sub = g.weights[np.ix_(part, part)]
        _, side_local = stoer_wagner_min_cut(sub)
        side = {part[i] for i in side_local}
        rest = set(part) - side
        stack.append(sorted(rest))
        stack.append(sorted(side))
    return sorted(parts, key=min)


@dataclass
class OutlierResult:
    partition: Partition
    clean: bool
    alpha: int
    iterations: int


def next_alpha(alpha: int) -> int:
    """Percentile increment: binary-search style below 95, then unit steps."""
    return alpha + (99 - alpha) // 2 if alpha < 95 else alpha + 1


def eliminate_outliers(
    g: ExtendedDependenceGraph,
    alpha0: int = 75,
    max_iterations: int = 20,
) -> OutlierResult:
    """Re-cluster at rising percentiles while the size distribution is
    outlier-skewed; at the percentile ceiling, min-cut the oversized
    clusters. Returns the best-so-far partition if the cap is reached."""
    alpha = alpha0
    partition = cc_partition(g, percentile=alpha)
    for iteration in range(max_iterations):
        sizes = partition.sizes()
        if skewness_g1(sizes) <= 2.0:
            return OutlierResult(partition, True, alpha, iteration)
        median = float(np.median(sizes))
        outliers = [ci for ci in partition.nonempty_indices()
                    if len(partition.clusters[ci]) > median]
        if not outliers:
            return OutlierResult(partition, True, alpha, iteration)
        if alpha < 99:
            alpha = min(next_alpha(alpha), 99)
            partition = cc_partition(g, percentile=alpha)
        else:
            clusters: list[set[int]] = []
            for ci in partition.nonempty_indices():
                members = partition.clusters[ci]
                if ci in outliers:
                    clusters.extend(_split_oversized(members, g, median))
                else:
                    clusters.append(set(members))
            partition = Partition(clusters, g)
    return OutlierResult(partition, False, alpha, max_iterations)
