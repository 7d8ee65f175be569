"""The architecture snapshot: one immutable, serializable analysis result.

A snapshot's `version` is a content hash (timestamp excluded), so applying
a reassignment and its inverse yields the same version again.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any

from archrec.architecture.borderline import BorderlineEntry, borderline_classes
from archrec.architecture.hierarchy import Hierarchy, build_hierarchy
from archrec.architecture.interfaces import (
    ClusterInterface,
    InteractionEdge,
    InteractionGraph,
    InterfaceMethod,
    compute_interactions,
    compute_interfaces,
)
from archrec.architecture.labels import ClusterLabel, auto_label
from archrec.architecture.viz import cross_layer_usage, viz_edges
from archrec.clustering.partition import Partition, QualityReport
from archrec.clustering.search import SearchConfig
from archrec.ingest.corpus import Corpus
from archrec.similarity.combine import SimilarityBundle

SCHEMA_VERSION = 1


@dataclass
class ArchitectureSnapshot:
    created_at: str
    fingerprint: str  # hash of the run configuration
    version: str  # hash of the content below (excludes created_at)
    corpus_ref: str
    similarity_ref: str
    seed_strategy: str
    entity_names: list[str]
    clusters: list[list[int]]
    quality: QualityReport
    interfaces: list[ClusterInterface]
    interactions: InteractionGraph
    labels: list[ClusterLabel]
    borderline: list[BorderlineEntry]
    viz: list[tuple[int, int, float, int]]
    hierarchy: Hierarchy
    cross_layer: dict[int, dict[str, list[str]]]
    config: dict[str, Any] = field(default_factory=dict)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def snapshot_to_dict(s: ArchitectureSnapshot) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "createdAt": s.created_at,
        "fingerprint": s.fingerprint,
        "version": s.version,
        "corpusRef": s.corpus_ref,
        "similarityRef": s.similarity_ref,
        "seedStrategy": s.seed_strategy,
        "entityNames": s.entity_names,
        "clusters": s.clusters,
        "quality": {
            "mq": s.quality.mq,
            "mqc": s.quality.mqc,
            "diff": s.quality.diff,
            "iso": s.quality.iso,
            "clusterCount": s.quality.cluster_count,
        },
        "interfaces": [
            {
                "cluster": i.cluster,
                "methods": [
                    {"owner": m.owner, "ownerName": s.entity_names[m.owner],
                     "method": m.method, "signature": m.signature}
                    for m in i.methods
                ],
            }
            for i in s.interfaces
        ],
        "interactions": {
            "clusters": s.interactions.clusters,
            "edges": [
                {
                    "provider": e.provider,
                    "consumer": e.consumer,
                    "methods": [
                        {"owner": owner, "ownerName": s.entity_names[owner], "method": m}
                        for owner, m in e.methods
                    ],
                }
                for e in s.interactions.edges
            ],
        },
        "labels": [
            {"cluster": l.cluster, "concepts": [[c, w] for c, w in l.concepts],
             "centroid": l.centroid}
            for l in s.labels
        ],
        "borderline": [
            {
                "entity": b.entity,
                "homeCluster": b.home_cluster,
                "foreignCluster": b.foreign_cluster,
                "foreignSimilarity": b.foreign_similarity,
                "homeSimilarity": b.home_similarity,
            }
            for b in s.borderline
        ],
        "viz": {"edges": [[u, v, w, bucket] for u, v, w, bucket in s.viz]},
        "hierarchy": {"levels": s.hierarchy.levels, "groupings": s.hierarchy.groupings},
        "crossLayer": {
            str(cluster): layers for cluster, layers in s.cross_layer.items()
        },
        "config": s.config,
    }


def snapshot_from_dict(d: dict) -> ArchitectureSnapshot:
    quality = QualityReport(
        mq=d["quality"]["mq"],
        mqc=d["quality"]["mqc"],
        diff=d["quality"]["diff"],
        iso=d["quality"]["iso"],
        cluster_count=d["quality"]["clusterCount"],
    )
    interfaces = [
        ClusterInterface(
            i["cluster"],
            [InterfaceMethod(m["owner"], m["method"], m["signature"])
             for m in i["methods"]],
        )
        for i in d["interfaces"]
    ]
    interactions = InteractionGraph(
        clusters=list(d["interactions"]["clusters"]),
        edges=[
            InteractionEdge(
                e["provider"], e["consumer"],
                [(m["owner"], m["method"]) for m in e["methods"]],
            )
            for e in d["interactions"]["edges"]
        ],
    )
    return ArchitectureSnapshot(
        created_at=d["createdAt"],
        fingerprint=d["fingerprint"],
        version=d["version"],
        corpus_ref=d.get("corpusRef", ""),
        similarity_ref=d.get("similarityRef", ""),
        seed_strategy=d.get("seedStrategy", ""),
        entity_names=list(d["entityNames"]),
        clusters=[list(c) for c in d["clusters"]],
        quality=quality,
        interfaces=interfaces,
        interactions=interactions,
        labels=[
            ClusterLabel(l["cluster"], [(c, w) for c, w in l["concepts"]], l["centroid"])
            for l in d["labels"]
        ],
        borderline=[
            BorderlineEntry(
                b["entity"], b["homeCluster"], b["foreignCluster"],
                b["foreignSimilarity"], b["homeSimilarity"],
            )
            for b in d["borderline"]
        ],
        viz=[(u, v, w, bucket) for u, v, w, bucket in d["viz"]["edges"]],
        hierarchy=Hierarchy(
            levels=[[list(c) for c in level] for level in d["hierarchy"]["levels"]],
            groupings=[[list(c) for c in lvl] for lvl in d["hierarchy"]["groupings"]],
        ),
        cross_layer={
            int(cluster): {layer: list(names) for layer, names in layers.items()}
            for cluster, layers in d.get("crossLayer", {}).items()
        },
        config=dict(d.get("config", {})),
    )


def _content_version(d: dict) -> str:
    scrubbed = {k: v for k, v in d.items() if k not in ("createdAt", "version")}
    canonical = json.dumps(scrubbed, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


def build_snapshot(
    corpus: Corpus,
    bundle: SimilarityBundle,
    partition: Partition,
    fingerprint: str = "",
    config: dict | None = None,
    seed_strategy: str = "",
    search_config: SearchConfig | None = None,
    tau: float = 0.9,
    label_k: int = 5,
    corpus_ref: str = "",
    similarity_ref: str = "",
) -> ArchitectureSnapshot:
    """Derive every architecture artifact from a partition (the steps that
    rerun after each manual reassignment)."""
    g = bundle.graph
    features = bundle.features
    snapshot = ArchitectureSnapshot(
        created_at=_now(),
        fingerprint=fingerprint,
        version="",
        corpus_ref=corpus_ref,
        similarity_ref=similarity_ref,
        seed_strategy=seed_strategy,
        entity_names=[e.name for e in corpus.entities],
        clusters=[sorted(c) for c in partition.clusters if c],
        quality=partition.quality(),
        interfaces=compute_interfaces(partition, corpus.dep_graph, corpus),
        interactions=compute_interactions(partition, corpus.dep_graph, corpus),
        labels=auto_label(partition, features.class_names, features.class_raw, g, label_k),
        borderline=borderline_classes(partition, g, tau),
        viz=viz_edges(g),
        hierarchy=build_hierarchy(partition, g, search_config),
        cross_layer=cross_layer_usage(partition, corpus.dep_graph.side_edges),
        config=dict(config or {}),
    )
    snapshot.version = _content_version(snapshot_to_dict(snapshot))
    return snapshot


@dataclass
class ReassignOutcome:
    snapshot: ArchitectureSnapshot
    partition: Partition
    rejected: list[dict]


def reassign_and_refresh(
    corpus: Corpus,
    bundle: SimilarityBundle,
    snapshot: ArchitectureSnapshot,
    moves: list[tuple[int | str, int | str]],
    search_config: SearchConfig | None = None,
) -> ReassignOutcome:
    """Apply manual moves (entity, target cluster index or 'new'), then rerun
    every derivation. Unknown entities/targets are rejected individually."""
    clusters = [set(c) for c in snapshot.clusters]
    name_to_id = {name: i for i, name in enumerate(snapshot.entity_names)}
    rejected: list[dict] = []
    for entity, target in moves:
        eid = name_to_id.get(entity) if isinstance(entity, str) else entity
        if eid is None or not 0 <= int(eid) < len(snapshot.entity_names):
            rejected.append({"entity": entity, "to": target, "reason": "unknown entity"})
            continue
        eid = int(eid)
        if isinstance(target, str) and target != "new":
            rejected.append({"entity": entity, "to": target, "reason": "unknown cluster"})
            continue
        if isinstance(target, int) and not 0 <= target < len(clusters):
            rejected.append({"entity": entity, "to": target, "reason": "unknown cluster"})
            continue
        source = next(ci for ci, c in enumerate(clusters) if eid in c)
        if target == "new":
            clusters[source].discard(eid)
            clusters.append({eid})
        elif target == source:
            pass  # vacuous move
        else:
            clusters[source].discard(eid)
            clusters[target].add(eid)
        clusters = [c for c in clusters if c]
    partition = Partition(clusters, bundle.graph)
    refreshed = build_snapshot(
        corpus,
        bundle,
        partition,
        fingerprint=snapshot.fingerprint,
        config=snapshot.config,
        seed_strategy=snapshot.seed_strategy,
        search_config=search_config,
        tau=float(snapshot.config.get("tau", 0.9)),
        label_k=int(snapshot.config.get("labelK", 5)),
        corpus_ref=snapshot.corpus_ref,
        similarity_ref=snapshot.similarity_ref,
    )
    return ReassignOutcome(refreshed, partition, rejected)


def save_snapshot(s: ArchitectureSnapshot, path) -> None:
    from pathlib import Path

    Path(path).write_text(
        json.dumps(snapshot_to_dict(s), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )


def load_snapshot(path) -> ArchitectureSnapshot:
    from pathlib import Path

    return snapshot_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
