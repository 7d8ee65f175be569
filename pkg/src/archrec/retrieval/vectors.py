"""Query vectors over the corpus vocabulary and cluster-level vectors.

Class-name concepts are matched to query words through a stemmed,
lowercased projection of the concept vocabulary so that one normalizer
covers both sides (concept surface forms stay untouched elsewhere).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from archrec.clustering.partition import Partition
from archrec.ingest.tokens import normalize_tokens, tokenize_identifier
from archrec.lang import JAVA_PROFILE, LanguageProfile
from archrec.similarity.matrices import FeatureMatrix, idf_vector


@dataclass
class IdfTable:
    idf: dict[str, float]
    n_docs: int

    @classmethod
    def from_matrix(cls, raw: FeatureMatrix) -> "IdfTable":
        vec = idf_vector(raw)
        return cls({t: float(vec[j]) for j, t in enumerate(raw.vocabulary)}, raw.d)


def text_to_vector(
    text: str,
    idf_table: IdfTable,
    profile: LanguageProfile = JAVA_PROFILE,
) -> dict[str, float]:
    """tf-idf query vector; corpus words reuse the corpus idf, query-only
    words get ln(N). Empty result means the query is unanswerable."""
    bag = normalize_tokens(
        tokenize_identifier(text), profile.reserved, profile.stop_words, profile.stemmer
    )
    unknown_idf = math.log(idf_table.n_docs) if idf_table.n_docs > 0 else 0.0
    return {
        term: count * idf_table.idf.get(term, unknown_idf)
        for term, count in sorted(bag.counts.items())
    }


def stemmed_projection(
    m: FeatureMatrix, profile: LanguageProfile = JAVA_PROFILE
) -> FeatureMatrix:
    """Fold a concept matrix's columns onto stemmed lowercase keys."""
    stems = [profile.stemmer(term.lower()) for term in m.vocabulary]
    vocab = sorted(set(stems))
    index = {t: j for j, t in enumerate(vocab)}
    cells = np.zeros((m.d, len(vocab)))
    for j, stem in enumerate(stems):
        cells[:, index[stem]] += m.cells[:, j]
    return FeatureMatrix(vocab, cells)


def sparse_cosine(q: dict[str, float], row: np.ndarray, vocab_index: dict[str, int]) -> float:
    dot = sum(w * row[vocab_index[t]] for t, w in q.items() if t in vocab_index)
    qn = math.sqrt(sum(w * w for w in q.values()))
    rn = float(np.linalg.norm(row))
    if qn == 0.0 or rn == 0.0:
        return 0.0
    return dot / (qn * rn)


@dataclass
class ClusterVectors:
    clusters: list[int]
    text_rows: np.ndarray  # per cluster, summed member rows of the text matrix
    name_rows: np.ndarray  # per cluster, summed rows of the projected name matrix
    text_index: dict[str, int]
    name_index: dict[str, int]


def cluster_vectors(
    p: Partition, text: FeatureMatrix, names_projected: FeatureMatrix
) -> ClusterVectors:
    order = sorted(p.nonempty_indices())
    text_rows = np.zeros((len(order), text.cells.shape[1]))
    name_rows = np.zeros((len(order), names_projected.cells.shape[1]))
    for out, ci in enumerate(order):
        members = sorted(p.clusters[ci])
        text_rows[out] = text.cells[members].sum(axis=0)
        name_rows[out] = names_projected.cells[members].sum(axis=0)
    return ClusterVectors(
        clusters=order,
        text_rows=text_rows,
        name_rows=name_rows,
        text_index={t: j for j, t in enumerate(text.vocabulary)},
        name_index={t: j for j, t in enumerate(names_projected.vocabulary)},
    )
