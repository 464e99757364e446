"""Randomized greedy solver driven by sampled path-count estimates.

Each iteration draws a batch of paths per still-unseparated pair on the
residual graph, accumulates the inverse-probability estimator per candidate
element, and removes the highest-scoring candidate.  When a whole iteration
yields no valid path, the fallback removes the cheapest element on a current
shortest path of a randomly chosen unseparated pair.

Sampling on the residual graph means a drawn path can never intersect the
already-removed set, so the estimator's indicator reduces to "reached the
target and contains the candidate".  Paths through removed elements would
credit every candidate equally and cancel in the argmax, so the selection is
unaffected by this choice.

Per-(iteration, pair) sample batches use independent derived random streams
and are accumulated in pair order, so results are seed-stable no matter how
the batches would be scheduled.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Optional

from .errors import InfeasibleInstanceError, ResourceError, TimeBudgetExceededError
from .graph import (
    UNREMOVABLE,
    VERTEX,
    PseudocutInstance,
    Solution,
    is_feasible,
    shortest_distance,
    shortest_path,
)
from .pathspace import SampledPath, sample_path
from .seeding import mix64
from .validate_util import require_valid


@dataclass(frozen=True)
class GestConfig:
    alpha: float = 0.5
    seed: int = 0
    max_iterations: Optional[int] = None
    fallback: bool = True
    sample_count_override: Optional[int] = None

    def __post_init__(self):
        if not 0 < self.alpha < 1:
            raise ValueError("alpha must lie in (0,1)")


def sample_count(n: int, k: int, alpha: float) -> int:
    """L = ceil(3 k^2 ln(2 n^2) / (2 alpha^2)), the concentration batch size."""
    return max(1, math.ceil(3 * k * k * math.log(2 * n * n) / (2 * alpha * alpha)))


def sigma(samples: list[SampledPath], elements, mode: str = VERTEX) -> float:
    """Monte Carlo estimate of the number of valid paths the set intersects.

    Averages indicator/probability over the batch; the indicator is 1 iff the
    sampled walk reached its target within budget and meets ``elements``.
    """
    if not samples:
        return 0.0
    elements = frozenset(elements)
    total = 0.0
    for q in samples:
        if not q.hit:
            continue
        members = q.vertices if mode == VERTEX else q.edges
        if any(e in elements for e in members):
            total += 1.0 / q.probability
    return total / len(samples)


def gesta_fallback(inst: PseudocutInstance, current: frozenset[int], rng: random.Random) -> int:
    """Cheapest removable element on a shortest path of a random unseparated pair."""
    g = inst.graph
    active = [
        (s, t)
        for s, t in inst.targets
        if shortest_distance(g, s, t, current, inst.mode) <= inst.T
    ]
    if not active:
        raise ValueError("fallback called with every pair already separated")
    s, t = active[rng.randrange(len(active))]
    _, verts, edges = shortest_path(g, s, t, current, inst.mode)
    members = verts if inst.mode == VERTEX else edges
    costs = g.vertex_costs if inst.mode == VERTEX else g.edge_costs
    candidates = [
        e for e in members if e not in inst.forbidden and costs[e] != UNREMOVABLE
    ]
    if not candidates:
        raise InfeasibleInstanceError(
            f"shortest path for pair ({s},{t}) consists solely of forbidden elements"
        )
    return min(candidates, key=lambda e: (costs[e], e))


def gest(
    inst: PseudocutInstance,
    cfg: GestConfig,
    deadline: Optional[float] = None,
) -> Solution:
    """Greedy sampling-estimation solver; GESTA when ``cfg.fallback`` is on."""
    start = time.monotonic()
    require_valid(inst)
    g = inst.graph
    mode = inst.mode
    costs = g.vertex_costs if mode == VERTEX else g.edge_costs
    label = "GESTA" if cfg.fallback else "GEST"
    L = cfg.sample_count_override or sample_count(g.n, inst.k, cfg.alpha)
    max_iterations = cfg.max_iterations
    if max_iterations is None:
        universe = g.n if mode == VERTEX else g.num_edges
        max_iterations = 2 * universe + 100

    candidate_set = frozenset(inst.removable_elements())
    chosen: set[int] = set()
    iteration = 0
    while True:
        removed = frozenset(chosen)
        active = [
            (pi, pair)
            for pi, pair in enumerate(inst.targets)
            if shortest_distance(g, pair[0], pair[1], removed, mode) <= inst.T
        ]
        if not active:
            break
        iteration += 1
        if iteration > max_iterations:
            raise ResourceError(f"iteration cap {max_iterations} exceeded without separating all pairs")
        if deadline is not None and time.monotonic() > deadline:
            raise TimeBudgetExceededError("sampling solver ran past its deadline")

        scores: dict[int, float] = {}
        for pi, (u, v) in active:
            rng = random.Random(mix64(cfg.seed, "batch", iteration, pi))
            inv_L = 1.0 / L
            for _ in range(L):
                q = sample_path(g, u, v, inst.T, removed, rng, mode)
                if not q.hit:
                    continue
                weight = inv_L / q.probability
                members = q.vertices if mode == VERTEX else q.edges
                for e in members:
                    if e in candidate_set and e not in chosen:
                        scores[e] = scores.get(e, 0.0) + weight

        if not scores:
            if cfg.fallback:
                rng_fb = random.Random(mix64(cfg.seed, "fallback", iteration))
                chosen.add(gesta_fallback(inst, frozenset(chosen), rng_fb))
            # Without the fallback, retry sampling; the iteration cap bounds it.
            continue
        # Candidates ranked by estimate per unit cost; uniform costs reduce
        # this to the plain argmax.  Ties break to the lowest element id.
        best = min(scores, key=lambda e: (-scores[e] / costs[e], e))
        chosen.add(best)

    elements = frozenset(chosen)
    cost = sum(costs[e] for e in elements)
    elapsed = int((time.monotonic() - start) * 1000)
    return Solution(elements, cost, is_feasible(inst, elements), label, cfg.seed, elapsed)
