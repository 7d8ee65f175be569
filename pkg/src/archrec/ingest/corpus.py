"""The corpus bundle: scoped entities, raw features, and the call graph."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from archrec.ingest.depgraph import (
    CallEdge,
    DependencyGraph,
    SideEdge,
    build_dependency_graph,
)
from archrec.ingest.model import (
    CodeEntity,
    MethodSig,
    extract_class_concepts,
    extract_method_concepts,
    extract_textual_features,
)
from archrec.ingest.scanner import CallFact, read_call_edge_file, scan_directory
from archrec.ingest.scoping import ScopingRules, scope_corpus
from archrec.ingest.tokens import TokenBag
from archrec.lang import JAVA_PROFILE, LanguageProfile


@dataclass
class Corpus:
    """Everything downstream analysis needs, immutable after ingestion."""

    entities: list[CodeEntity]
    token_bags: list[TokenBag]
    class_concepts: list[list[str]]
    method_concepts: list[list[str]]
    dep_graph: DependencyGraph
    excluded: dict[str, list[CodeEntity]] = field(default_factory=dict)

    @property
    def d(self) -> int:
        return len(self.entities)

    def public_method_counts(self) -> list[int]:
        return [len(e.public_methods) for e in self.entities]

    def packages(self) -> list[str]:
        return [e.packaging for e in self.entities]


def build_corpus(
    entities: list[CodeEntity],
    call_facts: list[CallFact],
    rules: ScopingRules | None = None,
    profile: LanguageProfile = JAVA_PROFILE,
) -> Corpus:
    """Scope, extract features, and resolve the dependency graph."""
    rules = rules or ScopingRules()
    business, excluded, _ = scope_corpus(entities, rules)
    dep = build_dependency_graph(business, call_facts, excluded)
    return Corpus(
        entities=business,
        token_bags=[extract_textual_features(e, profile) for e in business],
        class_concepts=[extract_class_concepts(e) for e in business],
        method_concepts=[extract_method_concepts(e) for e in business],
        dep_graph=dep,
        excluded=excluded,
    )


def ingest_directory(
    root: str | Path,
    rules: ScopingRules | None = None,
    call_edge_file: str | Path | None = None,
    profile: LanguageProfile = JAVA_PROFILE,
) -> Corpus:
    """Scan a `.java` tree (plus an optional call-edge file) into a corpus."""
    entities, calls = scan_directory(root)
    if call_edge_file:
        calls = calls + read_call_edge_file(call_edge_file)
    return build_corpus(entities, calls, rules, profile)


# ---------------------------------------------------------------- JSON i/o

def _entity_to_dict(e: CodeEntity) -> dict:
    return {
        "id": e.id,
        "name": e.name,
        "packaging": e.packaging,
        "publicMethods": [
            {"name": m.name, "paramTypes": list(m.param_types), "returnType": m.return_type}
            for m in e.public_methods
        ],
        "publicVariables": list(e.public_variables),
        "comments": list(e.comments),
        "inheritance": sorted(e.inheritance_raw),
        "sourcePath": e.source_path,
    }


def _entity_from_dict(d: dict) -> CodeEntity:
    return CodeEntity(
        id=d["id"],
        name=d["name"],
        packaging=d.get("packaging", ""),
        public_methods=[
            MethodSig(m["name"], tuple(m.get("paramTypes", ())), m.get("returnType", "void"))
            for m in d.get("publicMethods", ())
        ],
        public_variables=list(d.get("publicVariables", ())),
        comments=list(d.get("comments", ())),
        inheritance_raw=set(d.get("inheritance", ())),
        source_path=d.get("sourcePath", ""),
    )


def corpus_to_dict(c: Corpus) -> dict:
    return {
        "schemaVersion": 1,
        "entities": [_entity_to_dict(e) for e in c.entities],
        "tokenBags": [dict(sorted(b.counts.items())) for b in c.token_bags],
        "classConcepts": c.class_concepts,
        "methodConcepts": c.method_concepts,
        "depGraph": {
            "edges": [[e.caller, e.callee, e.method] for e in c.dep_graph.edges],
            "sideEdges": [
                [s.caller, s.callee_name, s.layer, s.method]
                for s in c.dep_graph.side_edges
            ],
        },
        "excluded": {
            layer: [_entity_to_dict(e) for e in members]
            for layer, members in c.excluded.items()
        },
    }


def corpus_from_dict(d: dict) -> Corpus:
    entities = [_entity_from_dict(x) for x in d["entities"]]
    dep = DependencyGraph(
        n=len(entities),
        edges=[CallEdge(*row) for row in d["depGraph"]["edges"]],
        side_edges=[SideEdge(*row) for row in d["depGraph"]["sideEdges"]],
    )
    return Corpus(
        entities=entities,
        token_bags=[TokenBag(Counter(b)) for b in d["tokenBags"]],
        class_concepts=[list(x) for x in d["classConcepts"]],
        method_concepts=[list(x) for x in d["methodConcepts"]],
        dep_graph=dep,
        excluded={
            layer: [_entity_from_dict(e) for e in members]
            for layer, members in d.get("excluded", {}).items()
        },
    )


def save_corpus(c: Corpus, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(corpus_to_dict(c), indent=2, sort_keys=True), encoding="utf-8"
    )


def load_corpus(path: str | Path) -> Corpus:
    return corpus_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
