"""Portfolio clustering: whole applications as the unit of similarity."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from archrec.clustering.partition import Partition
from archrec.clustering.search import SearchConfig, search
from archrec.ingest.corpus import Corpus
from archrec.ingest.depgraph import DependencyGraph, CallEdge
from archrec.ingest.scanner import CallFact
from archrec.similarity.combine import ExtendedDependenceGraph
from archrec.similarity.matrices import FeatureMatrix, apply_tf_idf, matrix_from_bags, matrix_from_concepts
from archrec.similarity.measures import cosine_similarity, minmax_similarity, structural_similarity

PORTFOLIO_STRATEGIES = ("cc", "random", "kmeans", "clique")

# Class-level defaults restricted to the three app-level features,
# renormalized to sum 1: textual 0.1, class-name 0.2, structural 0.2.
DEFAULT_APP_FACTORS = {"textual": 0.2, "class": 0.4, "structural": 0.4}


@dataclass
class ApplicationProfile:
    app_id: str
    text_vector: np.ndarray  # over the portfolio-wide token vocabulary
    name_vector: np.ndarray  # over the portfolio-wide concept vocabulary
    public_method_count: int


@dataclass
class PortfolioGraph:
    apps: list[str]
    matrices: dict[str, np.ndarray]
    graph: ExtendedDependenceGraph
    factors: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_APP_FACTORS))


def build_app_profiles(
    apps: dict[str, Corpus]
) -> tuple[list[ApplicationProfile], FeatureMatrix, FeatureMatrix]:
    """Giant per-app vectors: raw frequency unions of member-class vectors,
    idf recomputed over every class of every application."""
    if len(apps) < 2:
        raise ValueError("portfolio requires >= 2 apps")
    names = sorted(apps)

    class_bags: list[Counter] = []
    class_concepts: list[list[str]] = []
    spans: dict[str, slice] = {}
    offset = 0
    for app in names:
        corpus = apps[app]
        class_bags.extend(b.counts for b in corpus.token_bags)
        class_concepts.extend(corpus.class_concepts)
        spans[app] = slice(offset, offset + corpus.d)
        offset += corpus.d

    text_all = apply_tf_idf(matrix_from_bags(class_bags))
    name_all = apply_tf_idf(matrix_from_concepts(class_concepts))

    profiles = [
        ApplicationProfile(
            app_id=app,
            text_vector=text_all.cells[spans[app]].sum(axis=0),
            name_vector=name_all.cells[spans[app]].sum(axis=0),
            public_method_count=sum(apps[app].public_method_counts()),
        )
        for app in names
    ]
    return profiles, text_all, name_all


def cross_app_dependency_graph(
    apps: dict[str, Corpus], cross_calls: list[CallFact]
) -> DependencyGraph:
    """Apps as nodes; one edge per cross-application call fact. Facts name
    classes; the owning app is resolved by class name."""
    names = sorted(apps)
    app_index = {a: i for i, a in enumerate(names)}
    owner: dict[str, str] = {}
    for app in names:
        for e in apps[app].entities:
            owner.setdefault(e.name, app)
    g = DependencyGraph(n=len(names))
    for fact in cross_calls:
        src, dst = owner.get(fact.caller), owner.get(fact.callee)
        if src is None or dst is None or src == dst:
            continue
        g.edges.append(CallEdge(app_index[src], app_index[dst], fact.method))
    return g


def app_similarity(
    apps: dict[str, Corpus],
    cross_calls: list[CallFact] | None = None,
    factors: dict[str, float] | None = None,
) -> PortfolioGraph:
    """Cosine on giant text vectors, min/max on giant name vectors, the
    structural pipeline on cross-app calls; combined linearly."""
    profiles, _, _ = build_app_profiles(apps)
    names = [p.app_id for p in profiles]
    m = len(names)

    textual = np.zeros((m, m))
    name_sim = np.zeros((m, m))
    for i in range(m):
        for j in range(i + 1, m):
            textual[i, j] = textual[j, i] = cosine_similarity(
                profiles[i].text_vector, profiles[j].text_vector
            )
            both_zero = not profiles[i].name_vector.any() and not profiles[j].name_vector.any()
            name_sim[i, j] = name_sim[j, i] = (
                0.0 if both_zero
                else minmax_similarity(profiles[i].name_vector, profiles[j].name_vector)
            )

    dep = cross_app_dependency_graph(apps, cross_calls or [])
    structural = structural_similarity(dep, [p.public_method_count for p in profiles])

    factors = dict(factors or DEFAULT_APP_FACTORS)
    total = sum(factors.values())
    if total <= 0:
        raise ValueError("app similarity factors must sum to a positive value")
    factors = {k: v / total for k, v in factors.items()}

    matrices = {"textual": textual, "class": name_sim, "structural": structural}
    combined = sum(factors[k] * matrices[k] for k in matrices)
    np.fill_diagonal(combined, 0.0)
    return PortfolioGraph(
        apps=names,
        matrices=matrices,
        graph=ExtendedDependenceGraph(np.clip(combined, 0.0, 1.0)),
        factors=factors,
    )


def cluster_apps(
    pg: PortfolioGraph, config: SearchConfig | None = None
) -> tuple[Partition, dict]:
    """Reuse the partition search over the application graph."""
    base = config or SearchConfig()
    result = search(
        pg.graph,
        SearchConfig(
            strategies=tuple(s for s in base.strategies if s in PORTFOLIO_STRATEGIES)
            or PORTFOLIO_STRATEGIES,
            temp=base.temp,
            cooling=base.cooling,
            eps_stop=base.eps_stop,
            rng_seed=base.rng_seed,
            run_initiation_test=base.run_initiation_test,
        ),
    )
    groups = [[pg.apps[i] for i in sorted(c)] for c in result.partition.clusters]
    report = {
        "groups": groups,
        "mq": result.report.mq,
        "mqc": result.report.mqc,
        "seedStrategy": result.seed_strategy,
    }
    return result.partition, report
