"""Enumeration-based approximations: greedy covering and LP rounding.

The fractional covering relaxation is solved in-repo by a dense simplex with
Bland's anti-cycling rule, run on the packing dual (max 1.y s.t. per-element
capacity c); the slack basis is immediately feasible there and the optimal
covering weights fall out of the final objective row, so no two-phase setup
is needed.  Desk-scale instances fit comfortably.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InfeasibleInstanceError, ResourceError, TimeBudgetExceededError
from .graph import PseudocutInstance, Solution, is_feasible
from .pathspace import DEFAULT_PATH_BUDGET, CoveringInstance, enumerate_paths
from .validate_util import require_valid

LP_TOL = 1e-9
ROUNDING_SLACK = 1e-9


@dataclass(frozen=True)
class FractionalSolution:
    """Optimal weights of the covering LP relaxation."""

    weights: dict[int, float]
    objective: float


def _check_coverable(cov: CoveringInstance) -> None:
    if cov.uncoverable:
        p = cov.paths[cov.uncoverable[0]]
        raise InfeasibleInstanceError(
            f"path {'-'.join(map(str, p.vertices))} (pair {p.pair_index}) has no "
            "removable element; instance is infeasible"
        )


def greedy_cover(cov: CoveringInstance) -> list[int]:
    """Cost-normalized greedy: pick argmax covered/cost until all paths covered.

    Ties break to the lowest element id, which makes the output deterministic.
    """
    _check_coverable(cov)
    if not cov.paths:
        return []
    elements = cov.elements
    masks = {e: _bitmask(cov.covers[e]) for e in elements}
    uncovered = (1 << len(cov.paths)) - 1
    chosen: list[int] = []
    while uncovered:
        best_e = None
        best_ratio = -1.0
        for e in elements:
            gain = (masks[e] & uncovered).bit_count()
            if gain == 0:
                continue
            ratio = gain / cov.costs[e]
            if ratio > best_ratio:
                best_ratio = ratio
                best_e = e
        chosen.append(best_e)
        uncovered &= ~masks[best_e]
    return chosen


def _bitmask(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def gen(
    inst: PseudocutInstance,
    cov: Optional[CoveringInstance] = None,
    budget: int = DEFAULT_PATH_BUDGET,
    deadline: Optional[float] = None,
) -> Solution:
    """Greedy enumerative solver."""
    start = time.monotonic()
    require_valid(inst)
    if cov is None:
        cov = enumerate_paths(inst, budget=budget, deadline=deadline)
    chosen = frozenset(greedy_cover(cov))
    cost = sum(cov.costs[e] for e in chosen)
    elapsed = int((time.monotonic() - start) * 1000)
    return Solution(chosen, cost, is_feasible(inst, chosen), "GEN", None, elapsed)


def solve_covering_lp(
    cov: CoveringInstance,
    max_pivots: int = 100_000,
    deadline: Optional[float] = None,
) -> FractionalSolution:
    """Optimal fractional solution of the covering relaxation.

    min c.w  s.t.  sum_{i in p} w_i >= 1 for every path p,  w >= 0.
    The upper bounds w_i <= 1 are redundant at any optimum (capping a weight
    above 1 keeps every 0/1 covering constraint satisfied and lowers cost).
    """
    _check_coverable(cov)
    elements = cov.elements
    n_paths = len(cov.paths)
    if n_paths == 0 or not elements:
        return FractionalSolution({e: 0.0 for e in elements}, 0.0)

    m = len(elements)
    elem_pos = {e: i for i, e in enumerate(elements)}
    # Dual packing tableau: rows = element capacities, columns = path
    # variables then slacks then rhs.
    tab = np.zeros((m + 1, n_paths + m + 1))
    for j, cands in enumerate(cov.path_candidates):
        for e in cands:
            tab[elem_pos[e], j] = 1.0
    for i, e in enumerate(elements):
        tab[i, n_paths + i] = 1.0
        tab[i, -1] = cov.costs[e]
    tab[-1, :n_paths] = -1.0  # maximize 1.y

    basis = list(range(n_paths, n_paths + m))
    pivots = 0
    while True:
        if deadline is not None and time.monotonic() > deadline:
            raise TimeBudgetExceededError("LP solve ran past its deadline")
        # Bland: entering variable is the lowest-index improving column.
        enter = -1
        for j in range(n_paths + m):
            if tab[-1, j] < -LP_TOL:
                enter = j
                break
        if enter < 0:
            break
        pivots += 1
        if pivots > max_pivots:
            raise ResourceError(f"LP pivot cap {max_pivots} exceeded")
        leave = -1
        best = math.inf
        for i in range(m):
            a = tab[i, enter]
            if a > LP_TOL:
                ratio = tab[i, -1] / a
                if ratio < best - LP_TOL or (
                    ratio < best + LP_TOL and (leave < 0 or basis[i] < basis[leave])
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            raise InfeasibleInstanceError("dual packing LP unbounded; covering LP infeasible")
        tab[leave] /= tab[leave, enter]
        col = tab[:, enter].copy()
        col[leave] = 0.0
        tab -= np.outer(col, tab[leave])
        basis[leave] = enter

    weights = {e: max(0.0, float(tab[-1, n_paths + i])) for i, e in enumerate(elements)}
    objective = float(tab[-1, -1])
    for cands in cov.path_candidates:
        if sum(weights[e] for e in cands) < 1.0 - 1e-7:
            raise ResourceError("LP produced an infeasible covering vector")
    return FractionalSolution(weights, objective)


def fen(
    inst: PseudocutInstance,
    cov: Optional[CoveringInstance] = None,
    budget: int = DEFAULT_PATH_BUDGET,
    deadline: Optional[float] = None,
) -> Solution:
    """LP-rounding solver: keep every weight at least 1/(hop bound + 1).

    Every covering constraint has at most hop_bound+1 nonzero terms, so some
    weight in it clears the threshold; the rounded set is feasible and costs
    at most (hop_bound+1) times the LP optimum.
    """
    start = time.monotonic()
    require_valid(inst)
    if cov is None:
        cov = enumerate_paths(inst, budget=budget, deadline=deadline)
    if not cov.paths:
        return Solution(frozenset(), 0.0, True, "FEN", None, 0)
    frac = solve_covering_lp(cov, deadline=deadline)
    threshold = 1.0 / (inst.hop_bound + 1) - ROUNDING_SLACK
    chosen = frozenset(e for e, w in frac.weights.items() if w >= threshold)
    cost = sum(cov.costs[e] for e in chosen)
    elapsed = int((time.monotonic() - start) * 1000)
    return Solution(chosen, cost, is_feasible(inst, chosen), "FEN", None, elapsed)
