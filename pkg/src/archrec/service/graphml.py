"""GraphML export of the inter-cluster interaction graph.

The XML is built by hand so re-exports are byte-identical: fixed key ids,
cluster-id node order, provider/consumer edge order, sorted method lists.
"""

from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import escape

from archrec.architecture.snapshot import ArchitectureSnapshot

_HEADER = (
    '<?xml version="1.0" encoding="UTF-8"?>\n'
    '<graphml xmlns="http://graphml.graphdrawing.org/xmlns"'
    ' xmlns:xsi="http://www.w3.org/2001/XMLSchema-instance"'
    ' xsi:schemaLocation="http://graphml.graphdrawing.org/xmlns'
    ' http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd">\n'
    '  <key id="label" for="node" attr.name="label" attr.type="string"/>\n'
    '  <key id="methods" for="edge" attr.name="methods" attr.type="string"/>\n'
    '  <graph id="interactions" edgedefault="directed">\n'
)
_FOOTER = "  </graph>\n</graphml>\n"


def graphml_text(snapshot: ArchitectureSnapshot) -> str:
    labels = {l.cluster: " ".join(c for c, _ in l.concepts) for l in snapshot.labels}
    lines = [_HEADER]
    for cluster in snapshot.interactions.clusters:
        label = escape(labels.get(cluster, f"cluster {cluster}"))
        lines.append(
            f'    <node id="c{cluster}">'
            f'<data key="label">{label}</data></node>\n'
        )
    for i, edge in enumerate(snapshot.interactions.edges):
        methods = ";".join(
            f"{snapshot.entity_names[owner]}.{method}" for owner, method in edge.methods
        )
        lines.append(
            f'    <edge id="e{i}" source="c{edge.provider}" target="c{edge.consumer}">'
            f'<data key="methods">{escape(methods)}</data></edge>\n'
        )
    lines.append(_FOOTER)
    return "".join(lines)


def export_graphml(snapshot: ArchitectureSnapshot, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(graphml_text(snapshot), encoding="utf-8")
    return path
