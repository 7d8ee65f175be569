"""Method-call dependency multigraph over business-layer entities."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from archrec.ingest.model import CodeEntity
from archrec.ingest.scanner import CallFact

log = logging.getLogger(__name__)


@dataclass
class CallEdge:
    caller: int
    callee: int
    method: str


@dataclass
class SideEdge:
    """Call from a business entity into a scoped-out class."""

    caller: int
    callee_name: str
    layer: str
    method: str


@dataclass
class DependencyGraph:
    """Directed multigraph: one edge per call site; parallel edges kept."""

    n: int
    edges: list[CallEdge] = field(default_factory=list)
    side_edges: list[SideEdge] = field(default_factory=list)

    def out_edges(self, u: int) -> list[CallEdge]:
        return [e for e in self.edges if e.caller == u]


def build_dependency_graph(
    entities: list[CodeEntity],
    call_facts: list[CallFact],
    excluded: dict[str, list[CodeEntity]] | None = None,
) -> DependencyGraph:
    """Resolve class-name call facts to entity-id edges.

    Calls into excluded layers become side edges (kept for cross-layer
    display); self-calls are dropped; facts naming unknown classes or
    non-public methods are skipped with a warning.
    """
    by_name = {e.name: e for e in entities}
    layer_of: dict[str, str] = {}
    for layer, members in (excluded or {}).items():
        for e in members:
            layer_of.setdefault(e.name, layer)

    g = DependencyGraph(n=len(entities))
    for fact in call_facts:
        caller = by_name.get(fact.caller)
        if caller is None:
            continue  # caller itself scoped out or unknown: nothing to record
        callee = by_name.get(fact.callee)
        if callee is None:
            layer = layer_of.get(fact.callee)
            if layer is not None:
                g.side_edges.append(
                    SideEdge(caller.id, fact.callee, layer, fact.method)
                )
            else:
                log.warning("call to unknown class skipped: %s -> %s.%s",
                            fact.caller, fact.callee, fact.method)
            continue
        if callee.id == caller.id:
            continue
        if fact.method not in callee.public_method_names():
            log.warning("call to non-public method skipped: %s -> %s.%s",
                        fact.caller, fact.callee, fact.method)
            continue
        g.edges.append(CallEdge(caller.id, callee.id, fact.method))
    return g
