"""Bounded-path enumeration, covering view, exact counts, walk sampling."""

import random

import pytest

from pseudocut import (
    BudgetExceededError,
    Graph,
    PseudocutInstance,
    build_covering,
    count_paths_through,
    enumerate_paths,
    gen_fig1,
    gen_tightness,
    sample_path,
)

FIG1_PATHS = {
    (0, 5, 6, 7, 12),
    (0, 5, 8, 10, 12),
    (0, 1, 2, 7, 12),
    (0, 3, 4, 6, 7, 12),
    (0, 5, 6, 9, 11, 12),
}


def fig1_cov():
    _, inst = gen_fig1()
    return enumerate_paths(inst)


class TestEnumerate:
    def test_fig1_path_family(self):
        cov = fig1_cov()
        assert {p.vertices for p in cov.paths} == FIG1_PATHS

    def test_lengths_respect_threshold(self):
        cov = fig1_cov()
        assert all(p.length <= 5.0 for p in cov.paths)

    def test_already_separated_pair_yields_nothing(self):
        g = Graph(3)
        g.add_edge(0, 1, 4.0)
        g.add_edge(1, 2, 4.0)
        inst = PseudocutInstance(g, 5.0, ((0, 2),))
        assert enumerate_paths(inst).paths == []

    def test_tightness_counts(self):
        g, inst = gen_tightness(3)
        cov = enumerate_paths(inst)
        g3 = 3  # highest hub id
        through = sum(1 for p in cov.paths if g3 in p.vertices)
        assert through == 8
        assert len(cov.paths) == 14  # 2^(k+1) - 2

    def test_budget_enforced(self):
        _, inst = gen_fig1()
        with pytest.raises(BudgetExceededError):
            enumerate_paths(inst, budget=3)

    def test_deterministic_order(self):
        _, inst = gen_fig1()
        a = [p.vertices for p in enumerate_paths(inst).paths]
        b = [p.vertices for p in enumerate_paths(inst).paths]
        assert a == b
        assert a == sorted(a)  # lexicographic within the single pair

    def test_nonuniform_lengths_prune(self):
        g = Graph(4, directed=False)
        g.add_edge(0, 1, 1.0)
        g.add_edge(1, 3, 1.0)
        g.add_edge(0, 2, 3.0)
        g.add_edge(2, 3, 3.0)
        inst = PseudocutInstance(g, 4.0, ((0, 3),))
        cov = enumerate_paths(inst)
        assert [p.vertices for p in cov.paths] == [(0, 1, 3)]


class TestCovering:
    def test_candidates_exclude_forbidden(self):
        cov = fig1_cov()
        assert 0 not in cov.covers and 12 not in cov.covers

    def test_uncoverable_detection(self):
        g = Graph(3)
        g.add_edge(0, 1, 1.0)
        g.add_edge(1, 2, 1.0)
        inst = PseudocutInstance(g, 2.0, ((0, 2),), forbidden=frozenset({1}))
        cov = enumerate_paths(inst)
        assert cov.uncoverable == [0]

    def test_count_paths_through(self):
        cov = fig1_cov()
        assert count_paths_through(cov, {5, 7}) == 5
        assert count_paths_through(cov, set()) == 0
        assert count_paths_through(cov, {6}) == 3

    def test_build_covering_costs(self):
        g, inst = gen_fig1()
        g.set_vertex_cost(5, 7.0)
        cov = build_covering(inst, enumerate_paths(inst).paths)
        assert cov.costs[5] == 7.0


class TestSamplePath:
    def test_single_chain_is_deterministic(self):
        g = Graph(3)
        g.add_edge(0, 1, 1.0)
        g.add_edge(1, 2, 1.0)
        q = sample_path(g, 0, 2, 2.0, rng=random.Random(0))
        assert q.hit and q.vertices == (0, 1, 2) and q.probability == 1.0

    def test_star_splits_probability(self):
        # 0 -> 1 -> 3 reaches the target; 0 -> 2 dead-ends.
        g = Graph(4)
        g.add_edge(0, 1, 1.0)
        g.add_edge(0, 2, 1.0)
        g.add_edge(1, 3, 1.0)
        outcomes = set()
        for seed in range(20):
            q = sample_path(g, 0, 3, 2.0, rng=random.Random(seed))
            assert q.probability == 0.5
            outcomes.add((q.vertices, q.hit))
        assert outcomes == {((0, 1, 3), True), ((0, 2), False)}

    def test_fig1_first_step_probability(self):
        g, _ = gen_fig1()
        q = sample_path(g, 0, 12, 5.0, rng=random.Random(1))
        # three neighbors {1, 3, 5} at the first step
        assert q.probability <= 1 / 3

    def test_length_budget_blocks_long_edges(self):
        g = Graph(3)
        g.add_edge(0, 1, 3.0)
        g.add_edge(1, 2, 3.0)
        q = sample_path(g, 0, 2, 4.0, rng=random.Random(0))
        assert not q.hit and q.vertices == (0, 1)

    def test_removed_vertices_are_avoided(self):
        g, _ = gen_fig1()
        for seed in range(50):
            q = sample_path(g, 0, 12, 5.0, removed={5}, rng=random.Random(seed))
            assert 5 not in q.vertices
