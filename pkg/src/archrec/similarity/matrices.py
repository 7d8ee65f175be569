"""Document-term matrices over IR tokens and name concepts, with tf-idf."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from archrec.ingest.corpus import Corpus


@dataclass
class FeatureMatrix:
    """Rows follow corpus order; columns follow the sorted vocabulary."""

    vocabulary: list[str]
    cells: np.ndarray  # (d, t) nonnegative reals
    display: dict[str, str] = field(default_factory=dict)  # column key -> surface form

    @property
    def d(self) -> int:
        return self.cells.shape[0]

    def column(self, term: str) -> int | None:
        try:
            return self.vocabulary.index(term)
        except ValueError:
            return None

    def copy(self) -> "FeatureMatrix":
        return FeatureMatrix(list(self.vocabulary), self.cells.copy(), dict(self.display))


def matrix_from_bags(bags: list[dict[str, int] | Counter]) -> FeatureMatrix:
    vocab = sorted({term for bag in bags for term in bag})
    index = {term: j for j, term in enumerate(vocab)}
    cells = np.zeros((len(bags), len(vocab)))
    for i, bag in enumerate(bags):
        for term, count in bag.items():
            cells[i, index[term]] = count
    return FeatureMatrix(vocab, cells)


def matrix_from_concepts(concept_lists: list[list[str]]) -> FeatureMatrix:
    """Concept columns are keyed case-insensitively; the most frequent
    surface form (ties: lexicographic) is kept for display."""
    surface: dict[str, Counter] = {}
    bags: list[Counter] = []
    for concepts in concept_lists:
        bag: Counter = Counter()
        for word in concepts:
            key = word.lower()
            bag[key] += 1
            surface.setdefault(key, Counter())[word] += 1
        bags.append(bag)
    m = matrix_from_bags(bags)
    m.display = {
        key: min((-n, form) for form, n in forms.items())[1]
        for key, forms in surface.items()
    }
    return m


def idf_vector(raw: FeatureMatrix) -> np.ndarray:
    """ln(d / n_j) per column; columns appearing nowhere get 0."""
    d = raw.d
    n = (raw.cells > 0).sum(axis=0)
    idf = np.zeros(raw.cells.shape[1])
    present = n > 0
    idf[present] = np.log(d / n[present])
    return idf


def apply_tf_idf(m: FeatureMatrix) -> FeatureMatrix:
    """Scale each raw-frequency cell by its column's inverse document frequency."""
    weighted = m.copy()
    weighted.cells = m.cells * idf_vector(m)
    return weighted


@dataclass
class FeatureMatrices:
    """All per-corpus feature spaces, raw and weighted."""

    text_raw: FeatureMatrix
    text: FeatureMatrix
    class_raw: FeatureMatrix
    class_names: FeatureMatrix
    method_raw: FeatureMatrix
    method_names: FeatureMatrix
    package_paths: list[set[str]]
    inheritance: list[set[str]]


def build_feature_matrices(corpus: Corpus) -> FeatureMatrices:
    from archrec.similarity.measures import inheritance_closure

    text_raw = matrix_from_bags([b.counts for b in corpus.token_bags])
    class_raw = matrix_from_concepts(corpus.class_concepts)
    method_raw = matrix_from_concepts(corpus.method_concepts)
    return FeatureMatrices(
        text_raw=text_raw,
        text=apply_tf_idf(text_raw),
        class_raw=class_raw,
        class_names=apply_tf_idf(class_raw),
        method_raw=method_raw,
        method_names=apply_tf_idf(method_raw),
        package_paths=[set(e.package_path) for e in corpus.entities],
        inheritance=inheritance_closure(corpus.entities),
    )
