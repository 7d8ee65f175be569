"""Borderline classes: members pulled nearly as hard by a foreign cluster."""

from __future__ import annotations

from dataclasses import dataclass

from archrec.clustering.partition import Partition
from archrec.similarity.combine import ExtendedDependenceGraph


@dataclass
class BorderlineEntry:
    entity: int
    home_cluster: int
    foreign_cluster: int
    foreign_similarity: float
    home_similarity: float


def borderline_classes(
    p: Partition, g: ExtendedDependenceGraph, tau: float = 0.9
) -> list[BorderlineEntry]:
    """Flag entities whose strongest foreign edge rivals their strongest
    home edge (ratio test at tau); entities with no home edge are flagged
    whenever any foreign edge exists."""
    report = []
    for v in range(g.n):
        home = int(p.assignment[v])
        home_best = 0.0
        foreign_best, foreign_cluster = 0.0, -1
        for u in range(g.n):
            if u == v:
                continue
            w = float(g.weights[v, u])
            if w <= 0.0:
                continue
            if int(p.assignment[u]) == home:
                home_best = max(home_best, w)
            elif w > foreign_best:
                foreign_best, foreign_cluster = w, int(p.assignment[u])
        if foreign_best > 0.0 and foreign_best >= tau * home_best:
            report.append(
                BorderlineEntry(v, home, foreign_cluster, foreign_best, home_best)
            )
    return report
