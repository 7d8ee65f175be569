"""Cluster interfaces and the inter-cluster interaction graph."""

from __future__ import annotations

from dataclasses import dataclass, field

from archrec.clustering.partition import Partition
from archrec.ingest.corpus import Corpus
from archrec.ingest.depgraph import DependencyGraph


@dataclass
class InterfaceMethod:
    owner: int  # entity id of the class that owns the method
    method: str
    signature: str


@dataclass
class ClusterInterface:
    cluster: int
    methods: list[InterfaceMethod] = field(default_factory=list)


@dataclass
class InteractionEdge:
    provider: int  # cluster offering the methods
    consumer: int  # cluster calling them
    methods: list[tuple[int, str]] = field(default_factory=list)  # (owner, method)


@dataclass
class InteractionGraph:
    clusters: list[int]
    edges: list[InteractionEdge] = field(default_factory=list)


def _signature_of(corpus: Corpus, owner: int, method: str) -> str:
    for m in corpus.entities[owner].public_methods:
        if m.name == method:
            return m.signature()
    return f"{method}()"


def compute_interfaces(
    p: Partition, dep: DependencyGraph, corpus: Corpus
) -> list[ClusterInterface]:
    """A cluster's interface: its members' methods called from other clusters."""
    per_cluster: dict[int, set[tuple[int, str]]] = {}
    for e in dep.edges:
        cu, cv = int(p.assignment[e.caller]), int(p.assignment[e.callee])
        if cu != cv:
            per_cluster.setdefault(cv, set()).add((e.callee, e.method))
    interfaces = []
    for ci in sorted(p.nonempty_indices()):
        methods = [
            InterfaceMethod(owner, method, _signature_of(corpus, owner, method))
            for owner, method in sorted(per_cluster.get(ci, ()))
        ]
        interfaces.append(ClusterInterface(ci, methods))
    return interfaces


def compute_interactions(
    p: Partition, dep: DependencyGraph, corpus: Corpus
) -> InteractionGraph:
    """Directed edges provider -> consumer, labelled with the called methods."""
    del corpus  # reserved for richer edge labels
    lists: dict[tuple[int, int], set[tuple[int, str]]] = {}
    for e in dep.edges:
        consumer, provider = int(p.assignment[e.caller]), int(p.assignment[e.callee])
        if consumer != provider:
            lists.setdefault((provider, consumer), set()).add((e.callee, e.method))
    edges = [
        InteractionEdge(provider, consumer, sorted(methods))
        for (provider, consumer), methods in sorted(lists.items())
    ]
    return InteractionGraph(clusters=sorted(p.nonempty_indices()), edges=edges)
