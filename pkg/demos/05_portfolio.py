"""Clustering whole applications: giant vectors, app-level similarity, and
the portfolio-level partition search.

Run from the repository root:  python3 demos/05_portfolio.py
"""

import numpy as np

from archrec.clustering import SearchConfig
from archrec.ingest import CodeEntity, MethodSig, build_corpus
from archrec.portfolio import app_similarity, cluster_apps


def tiny_app(prefix, themes):
    entities = [
        CodeEntity(id=i, name=f"{prefix}{theme.title()}Service",
                   packaging=prefix.lower(),
                   public_methods=[MethodSig(f"run{theme.title()}")],
                   comments=[f"handles {theme} work"])
        for i, theme in enumerate(themes)
    ]
    return build_corpus(entities, [])


apps = {
    "webshop": tiny_app("Shop", ["order", "invoice", "cart"]),
    "billing": tiny_app("Bill", ["invoice", "payment", "order"]),
    "ledger": tiny_app("Ledger", ["payment", "account", "invoice"]),
    "racer": tiny_app("Race", ["sprite", "physics", "track"]),
    "puzzler": tiny_app("Puzzle", ["sprite", "grid", "physics"]),
    "shooter": tiny_app("Shoot", ["sprite", "physics", "aim"]),
}

portfolio = app_similarity(apps)
np.set_printoptions(precision=3, suppress=True)
print("apps:", portfolio.apps)
print("combined app similarity:")
print(portfolio.graph.weights)

_, report = cluster_apps(portfolio, SearchConfig(rng_seed=0))
print()
print("portfolio groups:")
for group in report["groups"]:
    print(" ", group)
print(f"mqc={report['mqc']:.3f} via {report['seedStrategy']}")
