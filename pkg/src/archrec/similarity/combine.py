"""Fusing the six similarity matrices into the extended dependence graph."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from archrec.ingest.corpus import Corpus
from archrec.similarity.matrices import FeatureMatrices, build_feature_matrices
from archrec.similarity.measures import (
    cosine_matrix,
    jaccard_matrix,
    minmax_matrix,
    structural_similarity,
)

FEATURE_NAMES = ("textual", "class", "method", "packaging", "inheritance", "structural")
SEMANTIC_FEATURES = ("textual", "class", "method")

_SUM_TOL = 1e-9


@dataclass(frozen=True)
class SignificanceFactors:
    textual: float = 0.1
    class_name: float = 0.2
    method_name: float = 0.1
    packaging: float = 0.2
    inheritance: float = 0.2
    structural: float = 0.2

    def as_tuple(self) -> tuple[float, ...]:
        return (self.textual, self.class_name, self.method_name,
                self.packaging, self.inheritance, self.structural)

    def validate(self) -> None:
        values = self.as_tuple()
        if any(v < 0 or v > 1 for v in values):
            raise ValueError(f"significance factors outside [0,1]: {values}")
        if abs(sum(values) - 1.0) > _SUM_TOL:
            raise ValueError(
                f"significance factors must sum to 1, got {sum(values)!r} from {values}"
            )

    @classmethod
    def from_sequence(cls, values) -> "SignificanceFactors":
        f = cls(*[float(v) for v in values])
        f.validate()
        return f


DEFAULT_FACTORS = SignificanceFactors()


@dataclass
class ExtendedDependenceGraph:
    """Complete weighted undirected graph; weights are combined similarities."""

    weights: np.ndarray  # (d, d) symmetric, zero diagonal, entries in [0, 1]

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    def weight(self, u: int, v: int) -> float:
        return float(self.weights[u, v])

    def edge_list(self) -> list[tuple[int, int, float]]:
        """Nonzero unordered pairs, heaviest first (ties: lowest ids)."""
        edges = [
            (u, v, float(self.weights[u, v]))
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.weights[u, v] > 0
        ]
        edges.sort(key=lambda e: (-e[2], e[0], e[1]))
        return edges

    @classmethod
    def from_weights(cls, weights) -> "ExtendedDependenceGraph":
        w = np.asarray(weights, dtype=float).copy()
        np.fill_diagonal(w, 0.0)
        return cls((w + w.T) / 2.0)


@dataclass
class SimilarityBundle:
    matrices: dict[str, np.ndarray]
    factors: SignificanceFactors
    graph: ExtendedDependenceGraph
    features: FeatureMatrices | None = field(default=None, repr=False)


def compute_similarities(
    corpus: Corpus, features: FeatureMatrices | None = None
) -> dict[str, np.ndarray]:
    f = features or build_feature_matrices(corpus)
    return {
        "textual": cosine_matrix(f.text.cells),
        "class": minmax_matrix(f.class_names.cells),
        "method": minmax_matrix(f.method_names.cells),
        "packaging": jaccard_matrix(f.package_paths),
        "inheritance": jaccard_matrix(f.inheritance),
        "structural": structural_similarity(
            corpus.dep_graph, corpus.public_method_counts()
        ),
    }


def combined_similarity(
    factors: SignificanceFactors, matrices: dict[str, np.ndarray]
) -> ExtendedDependenceGraph:
    """weight(i,j) = sum over features of alpha_f * delta_f[i,j]."""
    factors.validate()
    shapes = {m.shape for m in matrices.values()}
    if len(shapes) != 1:
        raise ValueError(f"similarity matrices disagree on shape: {shapes}")
    combined = sum(
        alpha * matrices[name]
        for alpha, name in zip(factors.as_tuple(), FEATURE_NAMES)
    )
    np.fill_diagonal(combined, 0.0)
    return ExtendedDependenceGraph(np.clip(combined, 0.0, 1.0))


def suggest_significance_factors(
    richness: dict[str, list[float]],
    base: SignificanceFactors = DEFAULT_FACTORS,
) -> SignificanceFactors:
    """Damp unevenly represented features.

    Starting from the defaults: a feature with all-zero richness is zeroed
    out; one whose coefficient of variation across classes exceeds 1 gets
    half its factor. The result is renormalized to sum 1.
    """
    values = dict(zip(FEATURE_NAMES, base.as_tuple()))
    for name, counts in richness.items():
        if name not in values:
            raise ValueError(f"unknown feature: {name}")
        arr = np.asarray(counts, dtype=float)
        if arr.size == 0:
            continue
        mean = arr.mean()
        if mean == 0.0:
            values[name] = 0.0
        elif arr.std() / mean > 1.0:
            values[name] *= 0.5
    total = sum(values.values())
    if total == 0.0:
        raise ValueError("all significance factors were damped to zero")
    return SignificanceFactors.from_sequence(v / total for v in values.values())


def semantic_richness(corpus: Corpus) -> dict[str, list[float]]:
    """Per-class richness counts for the three semantic features."""
    return {
        "textual": [float(b.total()) for b in corpus.token_bags],
        "class": [float(len(c)) for c in corpus.class_concepts],
        "method": [float(len(c)) for c in corpus.method_concepts],
    }


def build_similarity_bundle(
    corpus: Corpus, factors: SignificanceFactors | str | None = None
) -> SimilarityBundle:
    features = build_feature_matrices(corpus)
    matrices = compute_similarities(corpus, features)
    if factors == "auto":
        factors = suggest_significance_factors(semantic_richness(corpus))
    elif factors is None:
        factors = DEFAULT_FACTORS
    graph = combined_similarity(factors, matrices)
    return SimilarityBundle(matrices, factors, graph, features)


# ---------------------------------------------------------------- JSON i/o

def _sparse_triplets(m: np.ndarray) -> list[list]:
    rows, cols = np.nonzero(np.triu(m, k=1))
    return [[int(i), int(j), float(m[i, j])] for i, j in zip(rows, cols)]


def bundle_to_dict(b: SimilarityBundle) -> dict:
    return {
        "schemaVersion": 1,
        "d": b.graph.n,
        "factors": dict(zip(FEATURE_NAMES, b.factors.as_tuple())),
        "matrices": {name: _sparse_triplets(m) for name, m in b.matrices.items()},
        "combined": _sparse_triplets(b.graph.weights),
    }


def save_similarity_bundle(b: SimilarityBundle, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(bundle_to_dict(b), indent=2, sort_keys=True), encoding="utf-8"
    )


def graph_from_bundle_dict(d: dict) -> ExtendedDependenceGraph:
    w = np.zeros((d["d"], d["d"]))
    for i, j, value in d["combined"]:
        w[i, j] = w[j, i] = value
    return ExtendedDependenceGraph(w)
