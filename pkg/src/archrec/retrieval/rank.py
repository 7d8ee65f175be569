"""Query-to-class ranking and functional-entity-to-cluster mapping."""

from __future__ import annotations

from dataclasses import dataclass, field

from archrec.lang import JAVA_PROFILE, LanguageProfile
from archrec.retrieval.vectors import (
    ClusterVectors,
    IdfTable,
    sparse_cosine,
    stemmed_projection,
    text_to_vector,
)
from archrec.similarity.combine import ExtendedDependenceGraph
from archrec.similarity.matrices import FeatureMatrices


class UnanswerableQuery(ValueError):
    """The query text normalizes to nothing the corpus can match."""


@dataclass
class RankedList:
    entries: list[tuple[int, float]]  # (class id, score), best first

    def rank_of(self, class_id: int) -> int:
        for rank, (cid, _) in enumerate(self.entries, start=1):
            if cid == class_id:
                return rank
        raise KeyError(class_id)

    def ids(self) -> list[int]:
        return [cid for cid, _ in self.entries]


@dataclass
class QueryResult:
    vsm: RankedList
    centroid: RankedList
    final: RankedList  # fused rank score, LOWER is better
    top: list[tuple[int, float]] = field(default_factory=list)


def _vsm_scores(
    query_vec: dict[str, float], m: FeatureMatrices, names_projected
) -> list[float]:
    text_index = {t: j for j, t in enumerate(m.text.vocabulary)}
    name_index = {t: j for j, t in enumerate(names_projected.vocabulary)}
    scores = []
    for i in range(m.text.d):
        text_score = sparse_cosine(query_vec, m.text.cells[i], text_index)
        name_score = sparse_cosine(query_vec, names_projected.cells[i], name_index)
        scores.append((text_score + name_score) / 2.0)
    return scores


def query_classes(
    query: str,
    matrices: FeatureMatrices,
    g: ExtendedDependenceGraph,
    alpha: float = 0.6,
    beta: float = 0.4,
    r: int | None = None,
    profile: LanguageProfile = JAVA_PROFILE,
) -> QueryResult:
    """Rank classes against a query: vector-space scores, one propagation
    step of rank-weighted combined similarity, then weighted rank fusion."""
    if not 0.0 <= alpha <= 1.0 or not 0.0 <= beta <= 1.0 or abs(alpha + beta - 1.0) > 1e-9:
        raise ValueError(f"alpha+beta must equal 1 in [0,1], got {alpha}, {beta}")
    idf_table = IdfTable.from_matrix(matrices.text_raw)
    query_vec = text_to_vector(query, idf_table, profile)
    if not query_vec:
        raise UnanswerableQuery(f"query normalizes to nothing: {query!r}")

    names_projected = stemmed_projection(matrices.class_names, profile)
    scores = _vsm_scores(query_vec, matrices, names_projected)
    d = len(scores)
    r = d if r is None else min(r, d)
    by_vsm = sorted(range(d), key=lambda i: (-scores[i], i))[:r]
    vsm = RankedList([(i, scores[i]) for i in by_vsm])

    vsm_rank = {cid: rank for rank, cid in enumerate(vsm.ids(), start=1)}
    centroid_scores = {
        i: sum(
            float(g.weights[i, j]) / vsm_rank[j]
            for j in vsm.ids()
            if j != i
        )
        for i in vsm.ids()
    }
    by_centroid = sorted(vsm.ids(), key=lambda i: (-centroid_scores[i], i))
    centroid = RankedList([(i, centroid_scores[i]) for i in by_centroid])

    centroid_rank = {cid: rank for rank, cid in enumerate(centroid.ids(), start=1)}
    fused = {
        i: alpha * vsm_rank[i] + beta * centroid_rank[i]
        for i in vsm.ids()
    }
    by_final = sorted(vsm.ids(), key=lambda i: (fused[i], i))
    final = RankedList([(i, fused[i]) for i in by_final])
    return QueryResult(vsm, centroid, final, top=final.entries[:5])


@dataclass
class EntityMappingEntry:
    description: str
    clusters: list[tuple[int, float]]  # (cluster id, similarity), best first
    diagnostic: str = ""


def map_entities(
    descriptions: list[str],
    cluster_vecs: ClusterVectors,
    idf_table: IdfTable,
    theta: float = 0.1,
    profile: LanguageProfile = JAVA_PROFILE,
) -> list[EntityMappingEntry]:
    """Map each functional-entity description to the clusters scoring at
    least theta (mean of text-vector and name-vector cosines)."""
    mapping = []
    for text in descriptions:
        query_vec = text_to_vector(text, idf_table, profile)
        if not query_vec:
            mapping.append(EntityMappingEntry(text, [], "description normalizes to nothing"))
            continue
        sims = []
        for row, cluster in enumerate(cluster_vecs.clusters):
            t = sparse_cosine(query_vec, cluster_vecs.text_rows[row], cluster_vecs.text_index)
            n = sparse_cosine(query_vec, cluster_vecs.name_rows[row], cluster_vecs.name_index)
            sims.append((cluster, (t + n) / 2.0))
        sims.sort(key=lambda cs: (-cs[1], cs[0]))
        mapping.append(EntityMappingEntry(text, [cs for cs in sims if cs[1] >= theta]))
    return mapping
