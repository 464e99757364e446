"""The constrained path family and its covering view, plus path sampling.

``enumerate_paths`` lists every simple path of length at most T between every
target pair, via depth-first search with running-length pruning: a prefix
whose length already exceeds T (or whose edge count exceeds the hop bound)
cannot extend to a valid path, so the branch is cut.  The output is exactly
the set produced by filtering all bounded vertex sequences, in deterministic
order (pair index, then lexicographic vertex sequence).

The resulting :class:`CoveringInstance` doubles as the covering program:
elements are the paths, covering sets are removable vertices (or edges).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExceededError, TimeBudgetExceededError
from .graph import UNREMOVABLE, VERTEX, Graph, PseudocutInstance

DEFAULT_PATH_BUDGET = 10_000_000


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    length: float
    pair_index: int


@dataclass
class CoveringInstance:
    """Covering view of a path family; immutable once built.

    ``covers[e]`` lists the indices of paths that candidate element ``e``
    lies on.  Forbidden and unremovable elements never appear as candidates,
    so a path with an empty candidate list certifies infeasibility
    (``uncoverable``).
    """

    paths: list[Path]
    covers: dict[int, list[int]]
    costs: dict[int, float]
    mode: str
    uncoverable: list[int]
    path_candidates: list[tuple[int, ...]]

    @property
    def elements(self) -> list[int]:
        return sorted(self.covers)


@dataclass(frozen=True)
class SampledPath:
    """One draw from the sequential walk distribution over R(u,v).

    ``probability`` is the exact product of reciprocal neighborhood sizes
    along the walk; ``hit`` is true iff the walk reached v within budget.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    length: float
    probability: float
    hit: bool


def _path_elements(p: Path, mode: str) -> tuple[int, ...]:
    return p.vertices if mode == VERTEX else p.edges


def enumerate_paths(
    inst: PseudocutInstance,
    budget: int = DEFAULT_PATH_BUDGET,
    deadline: Optional[float] = None,
) -> CoveringInstance:
    """Enumerate P = union over target pairs of all simple paths with d(p) <= T."""
    g = inst.graph
    hop_bound = inst.hop_bound
    paths: list[Path] = []
    sorted_adj = [sorted(g.adj[v]) for v in range(g.n)]

    for pair_index, (s, t) in enumerate(inst.targets):
        on_path = [False] * g.n
        on_path[s] = True
        verts = [s]
        edges: list[int] = []

        def dfs(cur: int, length: float):
            if deadline is not None and time.monotonic() > deadline:
                raise TimeBudgetExceededError("path enumeration ran past its deadline")
            for head, eid in sorted_adj[cur]:
                if on_path[head]:
                    continue
                nlen = length + g.edge_lengths[eid]
                if nlen > inst.T:
                    continue
                verts.append(head)
                edges.append(eid)
                if head == t:
                    if len(paths) >= budget:
                        raise BudgetExceededError(
                            f"path budget {budget} exceeded while enumerating pair "
                            f"{pair_index} ({s},{t})"
                        )
                    paths.append(Path(tuple(verts), tuple(edges), nlen, pair_index))
                elif len(edges) < hop_bound:
                    on_path[head] = True
                    dfs(head, nlen)
                    on_path[head] = False
                verts.pop()
                edges.pop()

        dfs(s, 0.0)

    return build_covering(inst, paths)


def build_covering(inst: PseudocutInstance, paths: list[Path]) -> CoveringInstance:
    g = inst.graph
    mode = inst.mode
    costs_all = g.vertex_costs if mode == VERTEX else g.edge_costs
    covers: dict[int, list[int]] = {}
    costs: dict[int, float] = {}
    uncoverable: list[int] = []
    path_candidates: list[tuple[int, ...]] = []
    for idx, p in enumerate(paths):
        cands = []
        for e in _path_elements(p, mode):
            if e in inst.forbidden or costs_all[e] == UNREMOVABLE:
                continue
            cands.append(e)
            covers.setdefault(e, []).append(idx)
            costs[e] = costs_all[e]
        if not cands:
            uncoverable.append(idx)
        path_candidates.append(tuple(cands))
    return CoveringInstance(paths, covers, costs, mode, uncoverable, path_candidates)


def count_paths_through(cov: CoveringInstance, w) -> int:
    """Exact number of enumerated paths that the element set ``w`` intersects."""
    w = frozenset(w)
    count = 0
    for p in cov.paths:
        elems = p.vertices if cov.mode == VERTEX else p.edges
        if any(e in w for e in elems):
            count += 1
    return count


def sample_path(
    g: Graph,
    u: int,
    v: int,
    T: float,
    removed=frozenset(),
    rng=None,
    mode: str = VERTEX,
) -> SampledPath:
    """Draw one path from the uniform sequential-walk distribution.

    At each step the next vertex is chosen uniformly among neighbors that are
    not yet on the path, not removed, and whose edge keeps the running length
    within T.  The walk stops on reaching v or a dead end; the returned
    probability is exact.
    """
    if u == v:
        raise ValueError("sampling requires u != v")
    removed = frozenset(removed)
    verts = [u]
    edges: list[int] = []
    on_path = {u}
    length = 0.0
    prob = 1.0
    cur = u
    lengths = g.edge_lengths
    while cur != v:
        # One choice per neighbor vertex; parallel arcs collapse to the
        # shortest feasible one (lowest edge id on ties).
        options: dict[int, int] = {}
        for head, eid in g.adj[cur]:
            if head in on_path:
                continue
            if mode == VERTEX:
                if head in removed:
                    continue
            elif eid in removed:
                continue
            if length + lengths[eid] > T:
                continue
            best = options.get(head)
            if best is None or (lengths[eid], eid) < (lengths[best], best):
                options[head] = eid
        if not options:
            break
        heads = sorted(options)
        nxt = heads[rng.randrange(len(heads))]
        prob /= len(heads)
        eid = options[nxt]
        verts.append(nxt)
        edges.append(eid)
        on_path.add(nxt)
        length += lengths[eid]
        cur = nxt
    return SampledPath(tuple(verts), tuple(edges), length, prob, cur == v)


def format_paths(cov: CoveringInstance) -> str:
    """One path per line: ``pair_index: v0 v1 ... vl length``."""
    lines = []
    for p in cov.paths:
        verts = " ".join(str(v) for v in p.vertices)
        lines.append(f"{p.pair_index}: {verts} {p.length!r}")
    return "\n".join(lines) + ("\n" if lines else "")
