"""Partitions of the extended dependence graph and modularization quality.

Quality definitions: per cluster, eps_i sums weights over ordered intra
pairs (each unordered pair twice), mu_i sums weights from members to the
rest of the graph. CF_i = eps_i / (eps_i + mu_i), 0 on an empty
denominator; MQ = sum of CF_i; the search objective is
MQC = 2 MQ + |P| - Diff - Iso, where Diff is the max-min cluster size
spread and Iso counts clusters of size 1 or 2.

Clusters may be empty transiently while a search pass is running; empty
clusters contribute nothing to any quality term and `compact()` removes
them before a partition is handed back to callers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from archrec.similarity.combine import ExtendedDependenceGraph

NEW_CLUSTER = -1  # move target: open a fresh cluster


@dataclass(frozen=True)
class Move:
    node: int
    from_cluster: int
    to_cluster: int  # cluster index or NEW_CLUSTER


@dataclass(frozen=True)
class QualityReport:
    mq: float
    mqc: float
    diff: int
    iso: int
    cluster_count: int


def _cf(eps: float, mu: float) -> float:
    denom = eps + mu
    return eps / denom if denom > 0 else 0.0


class Partition:
    """Disjoint cover of the graph's vertices with cached quality sums."""

    def __init__(self, clusters: list[set[int]], g: ExtendedDependenceGraph):
        self.clusters: list[set[int]] = [set(c) for c in clusters]
        n = g.n
        self.assignment = np.full(n, -1, dtype=int)
        for ci, members in enumerate(self.clusters):
            for v in members:
                if self.assignment[v] != -1:
                    raise ValueError(f"vertex {v} assigned twice")
                self.assignment[v] = ci
        if (self.assignment == -1).any():
            missing = np.nonzero(self.assignment == -1)[0]
            raise ValueError(f"vertices not covered: {missing.tolist()}")
        self.eps: list[float] = []
        self.mu: list[float] = []
        self.rebuild_caches(g)

    # ------------------------------------------------------------- basics

    @classmethod
    def singletons(cls, g: ExtendedDependenceGraph) -> "Partition":
        return cls([{v} for v in range(g.n)], g)

    def copy(self) -> "Partition":
        dup = object.__new__(Partition)
        dup.clusters = [set(c) for c in self.clusters]
        dup.assignment = self.assignment.copy()
        dup.eps = list(self.eps)
        dup.mu = list(self.mu)
        return dup

    def sizes(self) -> list[int]:
        return [len(c) for c in self.clusters if c]

    @property
    def cluster_count(self) -> int:
        return sum(1 for c in self.clusters if c)

    def nonempty_indices(self) -> list[int]:
        return [ci for ci, c in enumerate(self.clusters) if c]

    def compact(self) -> "Partition":
        """Drop empty clusters and reindex densely."""
        keep = self.nonempty_indices()
        remap = {old: new for new, old in enumerate(keep)}
        self.clusters = [self.clusters[old] for old in keep]
        self.eps = [self.eps[old] for old in keep]
        self.mu = [self.mu[old] for old in keep]
        self.assignment = np.array([remap[ci] for ci in self.assignment], dtype=int)
        return self

    def member_sets(self) -> list[frozenset[int]]:
        return sorted(
            (frozenset(c) for c in self.clusters if c), key=lambda s: min(s)
        )

    # ------------------------------------------------------------ quality

    def rebuild_caches(self, g: ExtendedDependenceGraph) -> None:
        w = g.weights
        self.eps = []
        self.mu = []
        for members in self.clusters:
            if not members:
                self.eps.append(0.0)
                self.mu.append(0.0)
                continue
            idx = sorted(members)
            intra = float(w[np.ix_(idx, idx)].sum())
            total = float(w[idx, :].sum())
            self.eps.append(intra)
            self.mu.append(total - intra)

    @property
    def mq(self) -> float:
        return sum(_cf(e, m) for e, m in zip(self.eps, self.mu))

    def quality(self) -> QualityReport:
        sizes = self.sizes()
        diff = max(sizes) - min(sizes) if sizes else 0
        iso = sum(1 for s in sizes if s <= 2)
        mq_value = self.mq
        return QualityReport(
            mq=mq_value,
            mqc=2.0 * mq_value + len(sizes) - diff - iso,
            diff=diff,
            iso=iso,
            cluster_count=len(sizes),
        )

    # -------------------------------------------------------------- moves

    def _move_terms(self, g: ExtendedDependenceGraph, k: int, to: int):
        i = int(self.assignment[k])
        w_k = g.weights[k]
        t_k = float(w_k.sum())
        members_i = sorted(self.clusters[i])
        d_ki = float(w_k[members_i].sum())
        if to == NEW_CLUSTER:
            d_kj = 0.0
            eps_j = mu_j = 0.0
        else:
            members_j = sorted(self.clusters[to])
            d_kj = float(w_k[members_j].sum())
            eps_j, mu_j = self.eps[to], self.mu[to]
        return i, t_k, d_ki, d_kj, eps_j, mu_j

    def peek_move_mq(self, g: ExtendedDependenceGraph, k: int, to: int) -> float:
        """MQ after moving k to cluster `to`, without mutating anything."""
        i, t_k, d_ki, d_kj, eps_j, mu_j = self._move_terms(g, k, to)
        if to == i:
            raise ValueError("move target equals current cluster")
        eps_i_new = self.eps[i] - 2.0 * d_ki
        mu_i_new = self.mu[i] - t_k + 2.0 * d_ki
        eps_j_new = eps_j + 2.0 * d_kj
        mu_j_new = mu_j + t_k - 2.0 * d_kj
        return (
            self.mq
            - _cf(self.eps[i], self.mu[i])
            - _cf(eps_j, mu_j)
            + _cf(eps_i_new, mu_i_new)
            + _cf(eps_j_new, mu_j_new)
        )

    def peek_move(self, g: ExtendedDependenceGraph, k: int, to: int) -> QualityReport:
        """Full quality report after the move, without mutating anything."""
        i = int(self.assignment[k])
        mq_new = self.peek_move_mq(g, k, to)
        sizes = [len(c) for c in self.clusters]
        sizes[i] -= 1
        if to == NEW_CLUSTER:
            sizes.append(1)
        else:
            sizes[to] += 1
        sizes = [s for s in sizes if s > 0]
        diff = max(sizes) - min(sizes) if sizes else 0
        iso = sum(1 for s in sizes if s <= 2)
        return QualityReport(
            mq=mq_new,
            mqc=2.0 * mq_new + len(sizes) - diff - iso,
            diff=diff,
            iso=iso,
            cluster_count=len(sizes),
        )

    def apply_move(self, g: ExtendedDependenceGraph, k: int, to: int) -> float:
        """Move k to cluster `to` (or a fresh one), update caches, return MQ.

        The vacated cluster is left empty in place (compact() removes it);
        quality terms already ignore empty clusters.
        """
        i, t_k, d_ki, d_kj, eps_j, mu_j = self._move_terms(g, k, to)
        if to == i:
            raise ValueError("move target equals current cluster")
        if to == NEW_CLUSTER:
            to = len(self.clusters)
            self.clusters.append(set())
            self.eps.append(0.0)
            self.mu.append(0.0)
        self.clusters[i].discard(k)
        self.clusters[to].add(k)
        self.assignment[k] = to
        self.eps[i] -= 2.0 * d_ki
        self.mu[i] += 2.0 * d_ki - t_k
        self.eps[to] = eps_j + 2.0 * d_kj
        self.mu[to] = mu_j + t_k - 2.0 * d_kj
        if not self.clusters[i]:
            self.eps[i] = 0.0
            self.mu[i] = 0.0
        return self.mq


def mq(p: Partition, g: ExtendedDependenceGraph) -> float:
    """Modularization quality recomputed from scratch."""
    fresh = p.copy()
    fresh.rebuild_caches(g)
    return fresh.mq


def mqc(p: Partition, g: ExtendedDependenceGraph) -> QualityReport:
    """Quality report recomputed from scratch."""
    fresh = p.copy()
    fresh.rebuild_caches(g)
    return fresh.quality()


def mq_after_move(
    p: Partition, g: ExtendedDependenceGraph, m: Move, mq_old: float
) -> float:
    """Apply m incrementally and return the updated MQ.

    `mq_old` is accepted for interface parity with the recurrence; the
    cached quality sums already carry the same information.
    """
    del mq_old
    if int(p.assignment[m.node]) != m.from_cluster:
        raise ValueError(
            f"node {m.node} is in cluster {int(p.assignment[m.node])}, not {m.from_cluster}"
        )
    return p.apply_move(g, m.node, m.to_cluster)
