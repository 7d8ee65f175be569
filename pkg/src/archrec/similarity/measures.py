"""The six pairwise similarity measures.

Every matrix builder returns a symmetric (d, d) array with entries in
[0, 1] and a zero diagonal. 0/0 cases resolve to 0 off-diagonal: absence
of evidence is not similarity.
"""

from __future__ import annotations

from collections import defaultdict

import numpy as np

from archrec.ingest.depgraph import DependencyGraph
from archrec.ingest.model import CodeEntity


def cosine_similarity(u: np.ndarray, v: np.ndarray) -> float:
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


def minmax_similarity(u: np.ndarray, v: np.ndarray) -> float:
    """Jaccard variant over nonnegative vectors: sum(min) / sum(max).

    Two all-zero vectors compare equal (1.0); only featureless entities
    hit that case and the matrix builders override it off-diagonal.
    """
    denom = float(np.maximum(u, v).sum())
    if denom == 0.0:
        return 1.0
    return float(np.minimum(u, v).sum() / denom)


def jaccard_similarity(a: set, b: set) -> float:
    union = a | b
    if not union:
        return 0.0
    return len(a & b) / len(union)


def cosine_matrix(cells: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(cells, axis=1)
    safe = np.where(norms == 0.0, 1.0, norms)
    unit = cells / safe[:, None]
    sim = unit @ unit.T
    sim[norms == 0.0, :] = 0.0
    sim[:, norms == 0.0] = 0.0
    np.fill_diagonal(sim, 0.0)
    return np.clip((sim + sim.T) / 2.0, 0.0, 1.0)


def minmax_matrix(cells: np.ndarray) -> np.ndarray:
    d = cells.shape[0]
    sim = np.zeros((d, d))
    for i in range(d):
        mins = np.minimum(cells[i], cells[i + 1:]).sum(axis=1)
        maxs = np.maximum(cells[i], cells[i + 1:]).sum(axis=1)
        vals = np.divide(mins, maxs, out=np.zeros_like(mins), where=maxs > 0)
        sim[i, i + 1:] = vals
        sim[i + 1:, i] = vals
    return sim


def jaccard_matrix(sets: list[set]) -> np.ndarray:
    d = len(sets)
    sim = np.zeros((d, d))
    for i in range(d):
        for j in range(i + 1, d):
            sim[i, j] = sim[j, i] = jaccard_similarity(sets[i], sets[j])
    return sim


def inheritance_closure(entities: list[CodeEntity]) -> list[set[str]]:
    """Reflexive + symmetric closure of the raw inheritance lists."""
    closed = [set(e.inheritance_raw) | {e.name} for e in entities]
    for i, e in enumerate(entities):
        for j, other in enumerate(entities):
            if i != j and e.name in other.inheritance_raw:
                closed[i].add(other.name)
    return closed


def structural_similarity(
    g: DependencyGraph, public_method_counts: list[int]
) -> np.ndarray:
    """Call-graph similarity: collapse parallel edges, split each method's
    credit across its callers, size-normalize per pair, then scale by the
    global maximum."""
    d = g.n
    sim = np.zeros((d, d))
    if not g.edges:
        return sim

    collapsed: dict[tuple[int, int, str], int] = defaultdict(int)
    for e in g.edges:
        collapsed[(e.caller, e.callee, e.method)] += 1

    fan_in: dict[tuple[int, str], int] = defaultdict(int)
    for (_, callee, method), count in collapsed.items():
        fan_in[(callee, method)] += count

    pair_weight: dict[tuple[int, int], float] = defaultdict(float)
    for (caller, callee, method), count in collapsed.items():
        pair = (min(caller, callee), max(caller, callee))
        pair_weight[pair] += count / fan_in[(callee, method)]

    for (u, v), weight in pair_weight.items():
        methods = public_method_counts[u] + public_method_counts[v]
        sim[u, v] = sim[v, u] = weight / methods if methods else 0.0

    mu = sim.max()
    if mu > 0:
        sim /= mu
    return sim
