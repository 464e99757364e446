"""Exact solvers: branch-and-bound hitting set, and the polynomial T<=3 cases.

``opt_hitting_set`` computes the true optimum of the covering program by
branch and bound over the candidate elements that appear on at least one
path.  Two safe reductions keep the tree small: duplicate constraint sets are
merged, and an element is dropped when another element covers a superset of
its paths at no greater cost.

For uniform lengths and costs with a single pair, T=2 reduces to removing
all midpoints and T=3 additionally to a bipartite vertex cover, solved by
maximum matching and the alternating-reachability cover construction.
"""

from __future__ import annotations

import math
import time
from collections import deque
from typing import Optional

from .errors import InfeasibleInstanceError, InputError, ResourceError, TimeBudgetExceededError
from .graph import VERTEX, PseudocutInstance, Solution, is_feasible
from .pathspace import DEFAULT_PATH_BUDGET, CoveringInstance, enumerate_paths
from .validate_util import require_valid


def opt_hitting_set(
    cov: CoveringInstance,
    cost_cap: Optional[float] = None,
    node_budget: int = 2_000_000,
    deadline: Optional[float] = None,
) -> Solution:
    """Minimum-cost hitting set of the enumerated path family (exact)."""
    if cov.uncoverable:
        p = cov.paths[cov.uncoverable[0]]
        raise InfeasibleInstanceError(
            f"path {'-'.join(map(str, p.vertices))} has no removable element"
        )
    start = time.monotonic()
    if not cov.paths:
        return Solution(frozenset(), 0.0, True, "OPT", None, 0)

    # Deduplicate constraints: identical candidate sets are one constraint.
    unique_sets = sorted({frozenset(c) for c in cov.path_candidates}, key=sorted)
    elements = sorted({e for s in unique_sets for e in s})
    elem_idx = {e: i for i, e in enumerate(elements)}
    covers_mask = [0] * len(elements)
    for pi, s in enumerate(unique_sets):
        for e in s:
            covers_mask[elem_idx[e]] |= 1 << pi
    costs = [cov.costs[e] for e in elements]

    # Dominance: drop e when some cheaper-or-equal e' covers a superset of
    # its constraints (keep the lower id among exact ties).
    alive = [True] * len(elements)
    order = sorted(range(len(elements)), key=lambda i: (costs[i], elements[i]))
    for pos, i in enumerate(order):
        if not alive[i]:
            continue
        for j in order[pos + 1 :]:
            if alive[j] and covers_mask[j] | covers_mask[i] == covers_mask[i]:
                alive[j] = False
    kept = [i for i in range(len(elements)) if alive[i]]
    paths_mask = [0] * len(unique_sets)
    for i in kept:
        m = covers_mask[i]
        pi = 0
        while m:
            if m & 1:
                paths_mask[pi] |= 1 << i
            m >>= 1
            pi += 1
    path_elems = []
    for pi in range(len(unique_sets)):
        es = [i for i in kept if covers_mask[i] >> pi & 1]
        es.sort(key=lambda i: (costs[i], elements[i]))
        path_elems.append(es)

    all_covered = (1 << len(unique_sets)) - 1
    best_cost = math.inf if cost_cap is None else float(cost_cap)
    best_set: Optional[frozenset[int]] = None
    nodes = 0

    def lower_bound(covered: int, excluded: int) -> float:
        # Greedy disjoint-constraint packing: each pairwise element-disjoint
        # uncovered constraint forces at least its cheapest element.
        lb = 0.0
        used = excluded
        for pi in range(len(unique_sets)):
            if covered >> pi & 1:
                continue
            mask = paths_mask[pi] & ~used
            if mask == 0:
                continue
            if paths_mask[pi] & used & ~excluded:
                continue
            cheapest = min(costs[i] for i in path_elems[pi] if not excluded >> i & 1)
            lb += cheapest
            used |= paths_mask[pi]
        return lb

    def branch(covered: int, excluded: int, chosen: list[int], cost: float):
        nonlocal nodes, best_cost, best_set
        nodes += 1
        if nodes > node_budget:
            raise ResourceError(
                f"branch-and-bound node budget {node_budget} exceeded",
                incumbent=_incumbent(best_set, best_cost, elements, start),
            )
        if deadline is not None and nodes % 256 == 0 and time.monotonic() > deadline:
            raise TimeBudgetExceededError(
                "hitting-set search ran past its deadline",
                incumbent=_incumbent(best_set, best_cost, elements, start),
            )
        if covered == all_covered:
            if cost < best_cost:
                best_cost = cost
                best_set = frozenset(chosen)
            return
        # Branch on the uncovered constraint with fewest remaining elements.
        pick = -1
        pick_opts = None
        for pi in range(len(unique_sets)):
            if covered >> pi & 1:
                continue
            opts = [i for i in path_elems[pi] if not excluded >> i & 1]
            if not opts:
                return  # dead branch: constraint can no longer be covered
            if pick_opts is None or len(opts) < len(pick_opts):
                pick = pi
                pick_opts = opts
                if len(opts) == 1:
                    break
        new_excluded = excluded
        for i in pick_opts:  # ascending cost, then id
            if cost + costs[i] + lower_bound(covered | covers_mask[i], new_excluded) < best_cost - 1e-12:
                chosen.append(i)
                branch(covered | covers_mask[i], new_excluded, chosen, cost + costs[i])
                chosen.pop()
            new_excluded |= 1 << i  # later branches must not reuse i

    if lower_bound(0, 0) < best_cost:
        branch(0, 0, [], 0.0)
    if best_set is None:
        raise InfeasibleInstanceError("no hitting set within the cost cap")
    elems = frozenset(elements[i] for i in best_set)
    elapsed = int((time.monotonic() - start) * 1000)
    return Solution(elems, best_cost, True, "OPT", None, elapsed)


def _incumbent(best_set, best_cost, elements, start):
    if best_set is None:
        return None
    return Solution(
        frozenset(elements[i] for i in best_set),
        best_cost,
        True,
        "OPT(incumbent)",
        None,
        int((time.monotonic() - start) * 1000),
    )


def opt(
    inst: PseudocutInstance,
    budget: int = DEFAULT_PATH_BUDGET,
    deadline: Optional[float] = None,
    node_budget: int = 2_000_000,
) -> Solution:
    """Enumerate and solve to optimality; convenience wrapper for the oracle."""
    start = time.monotonic()
    require_valid(inst)
    cov = enumerate_paths(inst, budget=budget, deadline=deadline)
    sol = opt_hitting_set(cov, node_budget=node_budget, deadline=deadline)
    elapsed = int((time.monotonic() - start) * 1000)
    return Solution(sol.elements, sol.cost, is_feasible(inst, sol.elements), "OPT", None, elapsed)


def _require_uniform_single_pair(inst: PseudocutInstance, expected_T: int) -> tuple[int, int]:
    g = inst.graph
    if inst.mode != VERTEX or inst.k != 1:
        raise InputError("special-case solver needs vertex mode and a single pair")
    if inst.T != expected_T:
        raise InputError(f"special-case solver needs T = {expected_T}, got {inst.T}")
    if any(l != 1 for l in g.edge_lengths):
        raise InputError("special-case solver needs uniform (unit) edge lengths")
    if len(set(g.vertex_costs)) > 1:
        raise InputError("special-case solver needs uniform vertex costs")
    return inst.targets[0]


def _midpoints(g, s: int, t: int) -> set[int]:
    heads_of_s = {head for head, _ in g.adj[s]}
    return {x for x in heads_of_s if x not in (s, t) and any(h == t for h, _ in g.adj[x])}


def exact_T2(inst: PseudocutInstance) -> Solution:
    """T=2, uniform lengths/costs, single pair: remove all 2-hop midpoints."""
    start = time.monotonic()
    s, t = _require_uniform_single_pair(inst, 2)
    require_valid(inst)
    mids = frozenset(_midpoints(inst.graph, s, t))
    unit = inst.graph.vertex_costs[0] if inst.graph.vertex_costs else 1.0
    elapsed = int((time.monotonic() - start) * 1000)
    return Solution(mids, unit * len(mids), is_feasible(inst, mids), "T2-EXACT", None, elapsed)


def exact_T3(inst: PseudocutInstance) -> Solution:
    """T=3, uniform lengths/costs, single pair.

    Step 1 removes every 2-hop midpoint (the only way to break those paths).
    Step 2 covers the surviving 3-hop paths s-x-y-t: second-position nodes X
    and third-position nodes Y are disjoint, so the paths form a bipartite
    graph whose minimum vertex cover (via maximum matching) is optimal.
    """
    start = time.monotonic()
    s, t = _require_uniform_single_pair(inst, 3)
    require_valid(inst)
    g = inst.graph
    mids = _midpoints(g, s, t)
    bip: dict[int, set[int]] = {}
    for x, _ in g.adj[s]:
        if x in mids or x in (s, t):
            continue
        for y, _ in g.adj[x]:
            if y in mids or y in (s, t) or y == x:
                continue
            if any(h == t for h, _ in g.adj[y]):
                bip.setdefault(x, set()).add(y)
    matching = hopcroft_karp(bip)
    left_cover, right_cover = koenig_cover(bip, matching)
    chosen = frozenset(mids | left_cover | right_cover)
    unit = g.vertex_costs[0] if g.vertex_costs else 1.0
    elapsed = int((time.monotonic() - start) * 1000)
    return Solution(chosen, unit * len(chosen), is_feasible(inst, chosen), "T3-EXACT", None, elapsed)


def hopcroft_karp(bip: dict[int, set[int]]) -> dict[int, int]:
    """Maximum matching of a bipartite graph given as left -> set(right).

    Returns a left -> right mapping.  Phases of shortest augmenting paths.
    """
    INF = math.inf
    lefts = sorted(bip)
    pair_l: dict[int, int] = {}
    pair_r: dict[int, int] = {}
    dist: dict[int, float] = {}

    def bfs() -> bool:
        q = deque()
        for l in lefts:
            if l not in pair_l:
                dist[l] = 0
                q.append(l)
            else:
                dist[l] = INF
        found = False
        while q:
            l = q.popleft()
            for r in bip[l]:
                nl = pair_r.get(r)
                if nl is None:
                    found = True
                elif dist[nl] == INF:
                    dist[nl] = dist[l] + 1
                    q.append(nl)
        return found

    def dfs(l: int) -> bool:
        for r in sorted(bip[l]):
            nl = pair_r.get(r)
            if nl is None or (dist[nl] == dist[l] + 1 and dfs(nl)):
                pair_l[l] = r
                pair_r[r] = l
                return True
        dist[l] = INF
        return False

    while bfs():
        for l in lefts:
            if l not in pair_l:
                dfs(l)
    return pair_l


def koenig_cover(bip: dict[int, set[int]], matching: dict[int, int]):
    """Minimum vertex cover from a maximum matching (alternating reachability).

    Z = vertices reachable from unmatched left vertices along alternating
    paths; the cover is (left not in Z) union (right in Z), with size equal
    to the matching.
    """
    matched_r = {r: l for l, r in matching.items()}
    z_left = {l for l in bip if l not in matching}
    z_right: set[int] = set()
    frontier = list(z_left)
    while frontier:
        l = frontier.pop()
        for r in bip[l]:
            if r in z_right:
                continue
            z_right.add(r)
            nl = matched_r.get(r)
            if nl is not None and nl not in z_left:
                z_left.add(nl)
                frontier.append(nl)
    left_cover = {l for l in bip if l not in z_left}
    return left_cover, z_right
