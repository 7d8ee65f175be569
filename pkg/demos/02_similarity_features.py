"""The six similarity channels on a tiny hand-built corpus, one by one,
and their fusion into the extended dependence graph.

Run from the repository root:  python3 demos/02_similarity_features.py
"""

import numpy as np

from archrec.ingest import CallFact, CodeEntity, MethodSig, build_corpus
from archrec.similarity import (
    DEFAULT_FACTORS,
    combined_similarity,
    compute_similarities,
    semantic_richness,
    suggest_significance_factors,
)

entities = [
    CodeEntity(id=0, name="OrderManager", packaging="shop.orders",
               public_methods=[MethodSig("submitOrder")],
               public_variables=["orderCount"],
               comments=["submits and tracks customer orders"],
               inheritance_raw={"Service"}),
    CodeEntity(id=1, name="OrderStore", packaging="shop.orders",
               public_methods=[MethodSig("saveOrder")],
               public_variables=["savedOrders"],
               comments=["stores orders for retrieval"],
               inheritance_raw={"Service"}),
    CodeEntity(id=2, name="ReportPrinter", packaging="shop.reports",
               public_methods=[MethodSig("printReport")],
               public_variables=["pageCount"],
               comments=["prints usage reports"]),
]
calls = [CallFact("OrderManager", "OrderStore", "saveOrder"),
         CallFact("OrderManager", "OrderStore", "saveOrder"),
         CallFact("ReportPrinter", "OrderStore", "saveOrder")]

corpus = build_corpus(entities, calls)
matrices = compute_similarities(corpus)

np.set_printoptions(precision=3, suppress=True)
for name, matrix in matrices.items():
    print(f"delta_{name}:")
    print(matrix)
    print()

print("default significance factors:", DEFAULT_FACTORS)
auto = suggest_significance_factors(semantic_richness(corpus))
print("auto-damped factors:", auto)

graph = combined_similarity(DEFAULT_FACTORS, matrices)
print()
print("combined weights (extended dependence graph):")
print(graph.weights)
print()
print("OrderManager-OrderStore vs OrderManager-ReportPrinter:",
      f"{graph.weight(0, 1):.3f} vs {graph.weight(0, 2):.3f}")
