"""Query-to-class ranking and functional-entity-to-cluster mapping over the
demo corpus.

Run from the repository root:  python3 demos/04_query_and_mapping.py
"""

from pathlib import Path

from archrec.clustering import Partition
from archrec.retrieval import (
    IdfTable,
    cluster_vectors,
    map_entities,
    query_classes,
    stemmed_projection,
)
from archrec.service import RunConfig, analyze

corpus_dir = Path(__file__).parent.parent / "tests" / "fixtures" / "demo_corpus"
session = analyze(RunConfig(corpus=str(corpus_dir), rng_seed=7))
features = session.bundle.features
names = session.snapshot.entity_names

for query in ("submit customer order", "format report tables"):
    result = query_classes(query, features, session.bundle.graph)
    print(f"query: {query!r}")
    for rank, (cid, score) in enumerate(result.top, 1):
        print(f"  {rank}. {names[cid]} (fused rank score {score:.2f})")
    print()

partition = Partition([set(c) for c in session.snapshot.clusters], session.bundle.graph)
vectors = cluster_vectors(partition, features.text, stemmed_projection(features.class_names))
table = IdfTable.from_matrix(features.text_raw)
descriptions = ["order validation rules", "sales metrics reporting"]
for entry in map_entities(descriptions, vectors, table, theta=0.1):
    ranked = ", ".join(f"cluster {c} ({s:.2f})" for c, s in entry.clusters)
    print(f"functional entity {entry.description!r} -> {ranked}")
