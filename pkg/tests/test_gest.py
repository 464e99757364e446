"""Sampling-based greedy solver: estimator, fallback, end-to-end runs."""

import math
import random

import pytest

from pseudocut import (
    GestConfig,
    Graph,
    InfeasibleInstanceError,
    PseudocutInstance,
    count_paths_through,
    enumerate_paths,
    gen_fig1,
    gest,
    gesta_fallback,
    is_feasible,
    sample_count,
    sample_path,
    sigma,
)


def chain(n):
    g = Graph(n, directed=False)
    for u in range(n - 1):
        g.add_edge(u, u + 1, 1.0)
    return g


class TestSampleCount:
    def test_formula(self):
        assert sample_count(13, 1, 0.5) == math.ceil(3 * math.log(2 * 169) / 0.5)

    def test_grows_with_pairs(self):
        assert sample_count(50, 4, 0.5) == 16 * sample_count(50, 1, 0.5) or \
            sample_count(50, 4, 0.5) >= 15 * sample_count(50, 1, 0.5)

    def test_never_zero(self):
        assert sample_count(1, 1, 0.99) >= 1


class TestSigma:
    def test_all_misses_give_zero(self):
        g = Graph(4)
        g.add_edge(0, 1, 1.0)  # dead end; target 3 unreachable
        samples = [sample_path(g, 0, 3, 2.0, rng=random.Random(i)) for i in range(10)]
        assert sigma(samples, {1}) == 0.0

    def test_deterministic_walk_is_exact(self):
        g = chain(3)
        samples = [sample_path(g, 0, 2, 2.0, rng=random.Random(i)) for i in range(5)]
        assert sigma(samples, {1}) == 1.0

    def test_fig1_concentrates(self):
        g, inst = gen_fig1()
        cov = enumerate_paths(inst)
        rng = random.Random(11)
        n_samples = 100_000
        samples = [sample_path(g, 0, 12, 5.0, rng=rng) for _ in range(n_samples)]
        for target, elems in ((3, {6}), (5, {5, 7}), (1, {9})):
            vals = []
            fs = frozenset(elems)
            for q in samples:
                good = q.hit and any(v in fs for v in q.vertices)
                vals.append(1.0 / q.probability if good else 0.0)
            mean = sum(vals) / n_samples
            var = sum((x - mean) ** 2 for x in vals) / (n_samples - 1)
            se = math.sqrt(var / n_samples)
            tau = count_paths_through(cov, elems)
            assert tau == target
            assert abs(mean - tau) <= 3 * se + 1e-12
            assert abs(sigma(samples, elems) - mean) < 1e-9


class TestFallback:
    def test_picks_cheapest_interior(self):
        g = chain(4)
        g.set_vertex_cost(1, 3.0)
        inst = PseudocutInstance(g, 3.0, ((0, 3),))
        assert gesta_fallback(inst, frozenset(), random.Random(0)) == 2

    def test_endpoints_forbidden(self):
        g = chain(3)
        inst = PseudocutInstance(g, 2.0, ((0, 2),))
        assert gesta_fallback(inst, frozenset(), random.Random(0)) == 1

    def test_tie_breaks_to_lowest_id(self):
        g = chain(5)
        inst = PseudocutInstance(g, 4.0, ((0, 4),))
        assert gesta_fallback(inst, frozenset(), random.Random(0)) == 1

    def test_all_forbidden_raises(self):
        g = chain(3)
        inst = PseudocutInstance(g, 2.0, ((0, 2),), forbidden=frozenset({1}))
        with pytest.raises(InfeasibleInstanceError):
            gesta_fallback(inst, frozenset(), random.Random(0))


class TestGest:
    def test_already_separated(self):
        g = chain(3)
        inst = PseudocutInstance(g, 1.0, ((0, 2),))
        sol = gest(inst, GestConfig(seed=0))
        assert sol.elements == frozenset() and sol.feasible

    def test_single_interior_vertex(self):
        g = chain(3)
        inst = PseudocutInstance(g, 2.0, ((0, 2),))
        sol = gest(inst, GestConfig(seed=0))
        assert sol.elements == frozenset({1})

    def test_fig1_feasible_across_seeds(self):
        _, inst = gen_fig1()
        sizes = []
        for seed in range(15):
            sol = gest(inst, GestConfig(seed=seed))
            assert sol.feasible and is_feasible(inst, sol.elements)
            sizes.append(len(sol.elements))
        assert min(sizes) >= 2

    def test_seed_reproducible(self):
        _, inst = gen_fig1()
        a = gest(inst, GestConfig(seed=42))
        b = gest(inst, GestConfig(seed=42))
        assert a.elements == b.elements

    def test_label_tracks_fallback(self):
        _, inst = gen_fig1()
        assert gest(inst, GestConfig(seed=0, fallback=True)).algorithm == "GESTA"
        assert gest(inst, GestConfig(seed=0, fallback=False)).algorithm == "GEST"

    def test_multi_pair(self):
        g = Graph(6, directed=False)
        for a, b in ((0, 1), (1, 2), (3, 4), (4, 5), (1, 4)):
            g.add_edge(a, b, 1.0)
        inst = PseudocutInstance(g, 2.0, ((0, 2), (3, 5)))
        sol = gest(inst, GestConfig(seed=3))
        assert sol.feasible

    def test_bad_alpha_rejected(self):
        with pytest.raises(ValueError):
            GestConfig(alpha=1.5)
