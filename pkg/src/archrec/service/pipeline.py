"""End-to-end pipeline: ingest -> similarities -> search -> snapshot files."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from archrec.architecture.snapshot import ArchitectureSnapshot, build_snapshot, save_snapshot
from archrec.clustering.outliers import eliminate_outliers
from archrec.clustering.search import SearchConfig, SearchResult, search
from archrec.ingest.corpus import Corpus, ingest_directory, load_corpus, save_corpus
from archrec.ingest.scoping import ScopingError, ScopingRules
from archrec.service.config import ConfigError, RunConfig
from archrec.similarity.combine import (
    SignificanceFactors,
    SimilarityBundle,
    build_similarity_bundle,
    save_similarity_bundle,
)


class IngestionError(Exception):
    """Corpus could not be read or scoped (exit code 2)."""


@dataclass
class AnalysisSession:
    """Everything the service needs to answer queries and reassignments."""

    corpus: Corpus
    bundle: SimilarityBundle
    result: SearchResult
    snapshot: ArchitectureSnapshot
    config: RunConfig


def _resolve_factors(cfg: RunConfig):
    if cfg.factors is None:
        return None
    if cfg.factors == "auto":
        return "auto"
    return SignificanceFactors.from_sequence(cfg.factors)


def ingest_from_config(cfg: RunConfig) -> Corpus:
    path = Path(cfg.corpus)
    if not path.exists():
        raise IngestionError(f"corpus path does not exist: {path}")
    try:
        rules = ScopingRules.from_file(cfg.rules) if cfg.rules else ScopingRules()
    except (OSError, ValueError) as exc:
        raise ConfigError(f"bad scoping rules: {exc}") from exc
    try:
        if path.is_file() and path.suffix == ".json":
            return load_corpus(path)
        return ingest_directory(path, rules, cfg.call_edges or None)
    except ScopingError as exc:
        raise IngestionError(str(exc)) from exc
    except OSError as exc:
        raise IngestionError(f"cannot read corpus: {exc}") from exc


def analyze(cfg: RunConfig) -> AnalysisSession:
    """Run the whole pipeline in memory (no files written)."""
    cfg.validate()
    corpus = ingest_from_config(cfg)
    bundle = build_similarity_bundle(corpus, _resolve_factors(cfg))
    search_config = SearchConfig(
        strategies=tuple(cfg.strategies),
        temp=cfg.temp,
        cooling=cfg.cooling,
        eps_stop=cfg.eps_stop,
        rng_seed=cfg.rng_seed,
    )
    result = search(
        bundle.graph,
        search_config,
        entities=corpus.entities,
        delta_in=bundle.matrices["inheritance"],
    )
    partition = result.partition
    if cfg.eliminate_outliers:
        outcome = eliminate_outliers(bundle.graph)
        partition = outcome.partition
    snapshot = build_snapshot(
        corpus,
        bundle,
        partition,
        fingerprint=cfg.fingerprint(),
        config={
            **cfg.analysis_dict(),
            "tau": cfg.tau,
            "labelK": cfg.label_k,
        },
        seed_strategy=result.seed_strategy,
        search_config=search_config,
        tau=cfg.tau,
        label_k=cfg.label_k,
        corpus_ref="corpus.json",
        similarity_ref="similarity.json",
    )
    return AnalysisSession(corpus, bundle, result, snapshot, cfg)


def run_pipeline(cfg: RunConfig) -> AnalysisSession:
    """analyze() plus the output directory: corpus, similarity bundle,
    snapshot, and (optionally) the search trace."""
    session = analyze(cfg)
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    save_corpus(session.corpus, out / "corpus.json")
    save_similarity_bundle(session.bundle, out / "similarity.json")
    save_snapshot(session.snapshot, out / "snapshot.json")
    if cfg.write_trace:
        lines = [entry.format() for entry in session.result.trace]
        (out / "trace.log").write_text("\n".join(lines) + "\n", encoding="utf-8")
    return session


def load_session(snapshot_path: str | Path, cfg: RunConfig | None = None) -> AnalysisSession:
    """Rehydrate a session from a written snapshot and its sibling bundles."""
    from archrec.architecture.snapshot import load_snapshot
    from archrec.clustering.partition import Partition

    snapshot_path = Path(snapshot_path)
    snapshot = load_snapshot(snapshot_path)
    corpus = load_corpus(snapshot_path.parent / (snapshot.corpus_ref or "corpus.json"))
    config_data = dict(snapshot.config)
    run_cfg = cfg or RunConfig(**{
        k: v for k, v in config_data.items()
        if k in RunConfig.__dataclass_fields__
    })
    bundle = build_similarity_bundle(corpus, _resolve_factors(run_cfg))
    partition = Partition([set(c) for c in snapshot.clusters], bundle.graph)
    result = SearchResult(partition, partition.quality(), snapshot.seed_strategy, [])
    return AnalysisSession(corpus, bundle, result, snapshot, run_cfg)


def strip_timestamp(snapshot_json: str) -> str:
    """Snapshot content with the creation timestamp normalized (for
    byte-comparing two runs)."""
    data = json.loads(snapshot_json)
    data["createdAt"] = ""
    return json.dumps(data, indent=2, sort_keys=True)
