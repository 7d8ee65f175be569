"""Seed-population strategies."""

import numpy as np
import pytest

from archrec.clustering import SEED_STRATEGIES, cc_partition, clique_strength, generate_seed
from archrec.ingest import CodeEntity
from archrec.similarity import ExtendedDependenceGraph


def two_block_graph():
    """Two weight-1 triangles joined by a feeble bridge."""
    w = np.zeros((6, 6))
    for block in ({0, 1, 2}, {3, 4, 5}):
        for i in block:
            for j in block:
                if i < j:
                    w[i, j] = w[j, i] = 1.0
    w[2, 3] = w[3, 2] = 0.01
    return ExtendedDependenceGraph(w)


def entities_with_packages(packages):
    return [CodeEntity(id=i, name=f"C{i}", packaging=p) for i, p in enumerate(packages)]


class TestCcSeed:
    def test_two_blocks_recovered(self):
        g = two_block_graph()
        p = cc_partition(g, percentile=75)
        assert sorted(sorted(c) for c in p.clusters) == [[0, 1, 2], [3, 4, 5]]

    def test_component_cap_stops_growth(self):
        g = two_block_graph()
        entities = entities_with_packages(["a"] * 6)
        p = generate_seed("cc", g, entities=entities)
        assert p.cluster_count == 2  # cap 2 x 1 package

    def test_zero_weight_graph_gives_singletons(self):
        g = ExtendedDependenceGraph(np.zeros((4, 4)))
        p = cc_partition(g)
        assert p.cluster_count == 4

    def test_leftovers_attach_to_heaviest_cluster(self):
        w = np.zeros((5, 5))
        w[0, 1] = w[1, 0] = 1.0
        w[2, 3] = w[3, 2] = 1.0
        w[4, 2] = w[2, 4] = 0.05  # below the quartile, pulls 4 toward {2,3}
        g = ExtendedDependenceGraph(w)
        p = cc_partition(g, percentile=75)
        cluster_of_4 = int(p.assignment[4])
        assert 2 in p.clusters[cluster_of_4]

    def test_zero_similarity_leftover_stays_singleton(self):
        w = np.zeros((3, 3))
        w[0, 1] = w[1, 0] = 1.0
        g = ExtendedDependenceGraph(w)
        p = cc_partition(g, percentile=75)
        assert sorted(sorted(c) for c in p.clusters) == [[0, 1], [2]]


class TestOtherSeeds:
    def test_package_seed(self):
        g = ExtendedDependenceGraph(np.zeros((5, 5)))
        entities = entities_with_packages(["a", "a", "b", "c", "b"])
        p = generate_seed("package", g, entities=entities)
        assert sorted(sorted(c) for c in p.clusters) == [[0, 1], [2, 4], [3]]

    def test_inherit_seed_components(self):
        g = two_block_graph()
        delta_in = np.zeros((6, 6))
        delta_in[0, 1] = delta_in[1, 0] = 0.5
        delta_in[3, 4] = delta_in[4, 3] = 0.5
        p = generate_seed("inherit", g, delta_in=delta_in)
        # two components seeded; leftovers attach to their blocks
        assert sorted(sorted(c) for c in p.clusters) == [[0, 1, 2], [3, 4, 5]]

    def test_inherit_seed_no_edges_gives_singletons(self):
        g = ExtendedDependenceGraph(np.zeros((3, 3)))
        p = generate_seed("inherit", g, delta_in=np.zeros((3, 3)))
        assert p.cluster_count == 3

    def test_random_seed_is_valid_partition(self):
        g = two_block_graph()
        rng = np.random.default_rng(0)
        for _ in range(20):
            p = generate_seed("random", g, rng=rng)
            assert set().union(*p.clusters) == set(range(6))
            assert all(c for c in p.clusters)

    def test_kmeans_seed_is_valid_partition(self):
        g = two_block_graph()
        rng = np.random.default_rng(0)
        for _ in range(20):
            p = generate_seed("kmeans", g, rng=rng)
            assert set().union(*p.clusters) == set(range(6))

    def test_clique_seed_valid_with_quartile_centers(self):
        g = two_block_graph()
        p = generate_seed("clique", g)
        assert set().union(*p.clusters) == set(range(6))
        assert p.cluster_count == 2  # ceil(6/4) centers

    def test_single_vertex(self):
        g = ExtendedDependenceGraph(np.zeros((1, 1)))
        for strategy in SEED_STRATEGIES:
            p = generate_seed(strategy, g, entities=entities_with_packages(["a"]),
                              delta_in=np.zeros((1, 1)), rng=np.random.default_rng(0))
            assert [sorted(c) for c in p.clusters] == [[0]]

    def test_unknown_strategy(self):
        g = two_block_graph()
        with pytest.raises(ValueError):
            generate_seed("bogus", g)


class TestCliqueStrength:
    def test_triangle(self):
        w = np.zeros((3, 3))
        for i in range(3):
            for j in range(i + 1, 3):
                w[i, j] = w[j, i] = 1.0
        g = ExtendedDependenceGraph(w)
        top = {(0, 1), (0, 2), (1, 2)}
        assert clique_strength(0, top, g) == pytest.approx(1.0)

    def test_isolated_vertex(self):
        g = ExtendedDependenceGraph(np.zeros((3, 3)))
        assert clique_strength(0, set(), g) == 0.0

    def test_star_center_has_no_triangles(self):
        w = np.zeros((4, 4))
        for leaf in (1, 2, 3):
            w[0, leaf] = w[leaf, 0] = 1.0
        g = ExtendedDependenceGraph(w)
        top = {(0, 1), (0, 2), (0, 3)}
        assert clique_strength(0, top, g) == 0.0
