"""The six seed-population strategies for the partition search."""

from __future__ import annotations

import math
from collections import defaultdict

import numpy as np

from archrec.clustering.partition import Partition
from archrec.ingest.model import CodeEntity
from archrec.similarity.combine import ExtendedDependenceGraph

SEED_STRATEGIES = ("cc", "inherit", "package", "random", "kmeans", "clique")


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def _top_quartile_edges(
    g: ExtendedDependenceGraph, percentile: int = 75
) -> list[tuple[int, int, float]]:
    """Nonzero edges at or above the given weight percentile, heaviest first."""
    edges = g.edge_list()
    if not edges:
        return []
    threshold = float(np.percentile([w for _, _, w in edges], percentile))
    return [e for e in edges if e[2] >= threshold]


def _attach_leftovers(
    clusters: list[set[int]], g: ExtendedDependenceGraph
) -> list[set[int]]:
    """Attach unassigned vertices to the nearest cluster (maximum summed
    weight, ties to the lowest cluster index). Vertices with no similarity
    to any cluster stay singletons; with no clusters at all, everything
    becomes a singleton."""
    assigned = set().union(*clusters) if clusters else set()
    leftovers = [v for v in range(g.n) if v not in assigned]
    if not clusters:
        return [{v} for v in range(g.n)]
    singletons = []
    for v in sorted(leftovers):
        sums = [float(g.weights[v, sorted(c)].sum()) for c in clusters]
        best = max(range(len(clusters)), key=lambda ci: (sums[ci], -ci))
        if sums[best] > 0.0:
            clusters[best].add(v)
        else:
            singletons.append({v})
    return clusters + singletons


def _components_from_edges(n: int, edges: list[tuple[int, int]]) -> list[set[int]]:
    uf = _UnionFind(n)
    touched: set[int] = set()
    for u, v in edges:
        uf.union(u, v)
        touched.update((u, v))
    comps: dict[int, set[int]] = defaultdict(set)
    for v in sorted(touched):
        comps[uf.find(v)].add(v)
    return [comps[r] for r in sorted(comps, key=lambda r: min(comps[r]))]


def cc_partition(
    g: ExtendedDependenceGraph,
    percentile: int = 75,
    component_cap: int | None = None,
) -> Partition:
    """Connected components over the top-percentile edges.

    Edges are consumed heaviest-first; growth stops once the number of
    formed components reaches the cap (seed use: 2 x number of packages).
    Remaining vertices attach to the nearest cluster.
    """
    top = _top_quartile_edges(g, percentile)
    uf = _UnionFind(g.n)
    size = [1] * g.n
    formed = 0
    used: set[int] = set()
    for u, v, _ in top:
        if component_cap is not None and formed >= component_cap:
            break
        ra, rb = uf.find(u), uf.find(v)
        if ra == rb:
            used.update((u, v))
            continue
        grew_from_singletons = size[ra] == 1 and size[rb] == 1
        both_formed = size[ra] > 1 and size[rb] > 1
        uf.union(u, v)
        root = uf.find(u)
        size[root] = size[ra] + size[rb]
        if grew_from_singletons:
            formed += 1
        elif both_formed:
            formed -= 1
        used.update((u, v))
    comps: dict[int, set[int]] = defaultdict(set)
    for v in sorted(used):
        comps[uf.find(v)].add(v)
    clusters = [comps[r] for r in sorted(comps, key=lambda r: min(comps[r]))]
    return Partition(_attach_leftovers(clusters, g), g)


def clique_strength(
    v: int, top_q: set[tuple[int, int]], g: ExtendedDependenceGraph
) -> float:
    """Sum of w(u, w) over top-quartile edges (u, w) adjacent (in the
    top-quartile sense) to v through at least one of its endpoints."""
    total = 0.0
    for u, w in top_q:
        if v in (u, w):
            continue
        if (min(v, u), max(v, u)) in top_q or (min(v, w), max(v, w)) in top_q:
            total += g.weight(u, w)
    return total


def _quartile_count(n: int) -> int:
    return max(1, math.ceil(n / 4))


def generate_seed(
    strategy: str,
    g: ExtendedDependenceGraph,
    entities: list[CodeEntity] | None = None,
    delta_in: np.ndarray | None = None,
    rng: np.random.Generator | None = None,
) -> Partition:
    """Build one seed partition; see SEED_STRATEGIES for the choices."""
    d = g.n
    if d == 1:
        return Partition([{0}], g)

    if strategy == "cc":
        packages = {e.packaging for e in entities} if entities else {""}
        return cc_partition(g, 75, component_cap=2 * len(packages))

    if strategy == "inherit":
        if delta_in is None:
            raise ValueError("inherit seeding needs the inheritance similarity matrix")
        edges = [
            (u, v)
            for u in range(d)
            for v in range(u + 1, d)
            if delta_in[u, v] > 0
        ]
        clusters = _components_from_edges(d, edges)
        return Partition(_attach_leftovers(clusters, g), g)

    if strategy == "package":
        if entities is None:
            raise ValueError("package seeding needs entities")
        by_package: dict[str, set[int]] = defaultdict(set)
        for e in entities:
            by_package[e.packaging].add(e.id)
        clusters = [by_package[p] for p in sorted(by_package)]
        return Partition(clusters, g)

    if strategy == "random":
        if rng is None:
            raise ValueError("random seeding needs an rng")
        n = int(rng.integers(1, d + 1))
        assignment = rng.integers(1, n + 1, size=d)
        clusters = [set(np.nonzero(assignment == k)[0].tolist()) for k in range(1, n + 1)]
        return Partition([c for c in clusters if c], g)

    if strategy == "kmeans":
        if rng is None:
            raise ValueError("kmeans seeding needs an rng")
        k = int(rng.integers(1, d + 1))
        return _kmeans_partition(g, k, rng)

    if strategy == "clique":
        top = _top_quartile_edges(g, 75)
        top_set = {(u, v) for u, v, _ in top}
        strengths = [clique_strength(v, top_set, g) for v in range(d)]
        order = sorted(range(d), key=lambda v: (-strengths[v], v))
        centers = order[: _quartile_count(d)]
        clusters = [{c} for c in sorted(centers)]
        return Partition(_attach_leftovers(clusters, g), g)

    raise ValueError(f"unknown seed strategy: {strategy}")


def _kmeans_partition(
    g: ExtendedDependenceGraph, k: int, rng: np.random.Generator, max_iter: int = 100
) -> Partition:
    """Lloyd iterations over combined-weight rows as feature vectors."""
    rows = g.weights
    d = rows.shape[0]
    k = min(k, d)
    centroid_ids = rng.choice(d, size=k, replace=False)
    centroids = rows[np.sort(centroid_ids)].copy()
    labels = np.full(d, -1, dtype=int)
    for _it in range(max_iter):
        dists = ((rows[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
        new_labels = dists.argmin(axis=1)
        if (new_labels == labels).all():
            break
        labels = new_labels
        for c in range(k):
            members = rows[labels == c]
            if len(members):
                centroids[c] = members.mean(axis=0)
    clusters = [set(np.nonzero(labels == c)[0].tolist()) for c in range(k)]
    return Partition([c for c in clusters if c], g)
