"""Hierarchical clustering: clusters become atomic nodes, level by level."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from archrec.clustering.partition import Partition
from archrec.clustering.search import SearchConfig, search
from archrec.similarity.combine import ExtendedDependenceGraph

HIERARCHY_STRATEGIES = ("cc", "random", "kmeans", "clique")


@dataclass
class Hierarchy:
    """levels[0] is the class-level clustering; each higher level groups the
    clusters of the level below. groupings[L] gives level-L+1's clusters as
    index lists into level L."""

    levels: list[list[list[int]]] = field(default_factory=list)
    groupings: list[list[list[int]]] = field(default_factory=list)


def cluster_pair_similarity(
    cl1: set[int] | list[int], cl2: set[int] | list[int], g: ExtendedDependenceGraph
) -> float:
    """Mean combined similarity over the cross pairs of two disjoint clusters."""
    a, b = sorted(cl1), sorted(cl2)
    if not a or not b:
        raise ValueError("clusters must be nonempty")
    return float(g.weights[np.ix_(a, b)].sum()) / (len(a) * len(b))


def super_graph(
    clusters: list[list[int]], g: ExtendedDependenceGraph
) -> ExtendedDependenceGraph:
    m = len(clusters)
    w = np.zeros((m, m))
    for i in range(m):
        for j in range(i + 1, m):
            w[i, j] = w[j, i] = cluster_pair_similarity(clusters[i], clusters[j], g)
    return ExtendedDependenceGraph(w)


def build_hierarchy(
    p0: Partition,
    g: ExtendedDependenceGraph,
    config: SearchConfig | None = None,
    eps_stop: float = 1e-6,
) -> Hierarchy:
    """Repeat the MQC search over cluster-level graphs until a single cluster
    remains, no coarsening happens, or similarities vanish."""
    base = config or SearchConfig()
    hierarchy = Hierarchy(levels=[[sorted(c) for c in p0.clusters if c]])
    while len(hierarchy.levels[-1]) > 1:
        current = hierarchy.levels[-1]
        sg = super_graph(current, g)
        level_config = SearchConfig(
            strategies=tuple(s for s in base.strategies if s in HIERARCHY_STRATEGIES)
            or HIERARCHY_STRATEGIES,
            temp=base.temp,
            cooling=base.cooling,
            eps_stop=base.eps_stop,
            rng_seed=base.rng_seed + len(hierarchy.levels),
            run_initiation_test=base.run_initiation_test,
        )
        result = search(sg, level_config)
        grouping = [sorted(c) for c in result.partition.clusters if c]
        grouping.sort(key=min)
        if len(grouping) >= len(current) or result.report.mq < eps_stop:
            break
        hierarchy.groupings.append(grouping)
        hierarchy.levels.append(
            [sorted(x for gi in group for x in current[gi]) for group in grouping]
        )
    return hierarchy
