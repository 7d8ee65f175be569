"""End-to-end walkthrough: from a directory of .java files to an
architecture snapshot (clusters, interfaces, interactions, labels).

Run from the repository root:  python3 demos/01_analyze_corpus.py
"""

from pathlib import Path

from archrec.service import RunConfig, analyze

corpus_dir = Path(__file__).parent.parent / "tests" / "fixtures" / "demo_corpus"

session = analyze(RunConfig(corpus=str(corpus_dir), rng_seed=7))
snapshot = session.snapshot
names = snapshot.entity_names

print(f"analyzed {session.corpus.d} business classes "
      f"(excluded: { {k: len(v) for k, v in session.corpus.excluded.items()} })")
print(f"search seed that won: {snapshot.seed_strategy}")
print(f"quality: mq={snapshot.quality.mq:.4f} mqc={snapshot.quality.mqc:.4f}")
print()

for label in snapshot.labels:
    members = [names[v] for v in snapshot.clusters[label.cluster]]
    concepts = ", ".join(c for c, _ in label.concepts)
    print(f"cluster {label.cluster}: {members}")
    print(f"  label: {concepts}")
    print(f"  centroid: {names[label.centroid]}")

print()
for interface in snapshot.interfaces:
    if interface.methods:
        methods = ", ".join(f"{names[m.owner]}.{m.method}" for m in interface.methods)
        print(f"cluster {interface.cluster} interface: {methods}")
for edge in snapshot.interactions.edges:
    methods = ", ".join(f"{names[o]}.{m}" for o, m in edge.methods)
    print(f"interaction: cluster {edge.provider} serves cluster {edge.consumer} via {methods}")

print()
print("cross-layer usage:", snapshot.cross_layer)
print("hierarchy levels:", [len(level) for level in snapshot.hierarchy.levels], "clusters per level")
