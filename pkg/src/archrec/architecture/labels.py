"""Auto-labelling: dominant class-name concepts and cluster centroids."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from archrec.clustering.partition import Partition
from archrec.similarity.combine import ExtendedDependenceGraph
from archrec.similarity.matrices import FeatureMatrix


@dataclass
class ClusterLabel:
    cluster: int
    concepts: list[tuple[str, float]] = field(default_factory=list)  # score-desc
    centroid: int = -1


def _top_concepts(
    weights: np.ndarray, matrix: FeatureMatrix, k: int
) -> list[tuple[str, float]]:
    scored = [
        (matrix.display.get(term, term), float(weights[j]))
        for j, term in enumerate(matrix.vocabulary)
        if weights[j] > 0
    ]
    scored.sort(key=lambda t: (-t[1], t[0].lower()))
    return scored[:k]


def cluster_centroid(
    members: list[int], g: ExtendedDependenceGraph
) -> int:
    """The member with maximum summed combined weight to its co-members."""
    members = sorted(members)
    sums = {v: float(g.weights[v, members].sum()) for v in members}
    return max(members, key=lambda v: (sums[v], -v))


def auto_label(
    p: Partition,
    class_matrix: FeatureMatrix,
    class_raw: FeatureMatrix,
    g: ExtendedDependenceGraph,
    k: int = 5,
) -> list[ClusterLabel]:
    """Top-k summed tf-idf class-name concepts per cluster; when tf-idf
    zeroes everything (ubiquitous concepts), raw frequencies stand in."""
    labels = []
    for ci in sorted(p.nonempty_indices()):
        members = sorted(p.clusters[ci])
        weighted = class_matrix.cells[members].sum(axis=0)
        concepts = _top_concepts(weighted, class_matrix, k)
        if not concepts:
            raw = class_raw.cells[members].sum(axis=0)
            concepts = _top_concepts(raw, class_raw, k)
        labels.append(ClusterLabel(ci, concepts, cluster_centroid(members, g)))
    return labels
