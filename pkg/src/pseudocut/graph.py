"""Directed weighted graphs, shortest paths under element removal, instances.

A graph carries positive edge lengths ``d`` and positive removal costs on
vertices (vertex mode) or edges (edge mode).  Undirected inputs are stored as
two arcs sharing one edge id, so in edge mode removing the edge removes both
directions.  Elements whose cost is the ``UNREMOVABLE`` sentinel (infinity)
may never enter a solution.

Graphs are immutable once built (by convention: nothing here mutates them
after construction) and all queries are read-only, so a single graph can be
shared by concurrent solver runs.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .errors import ForbiddenElementError, InputError

UNREMOVABLE = math.inf

VERTEX = "vertex"
EDGE = "edge"


class Graph:
    """Directed graph with per-edge lengths and per-element removal costs.

    Attributes:
        n: number of vertices (ids 0..n-1).
        directed: False if the graph was loaded as undirected (arc pairs).
        adj: adjacency lists, ``adj[u]`` is a list of ``(head, edge_id)``.
        edge_lengths / edge_costs: indexed by edge id.
        vertex_costs: indexed by vertex id.
    """

    def __init__(self, n: int, directed: bool = True):
        if n < 1:
            raise InputError("graph needs at least one vertex")
        self.n = n
        self.directed = directed
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self.edge_lengths: list[float] = []
        self.edge_costs: list[float] = []
        self.vertex_costs: list[float] = [1.0] * n
        self.arcs: list[tuple[int, int, int]] = []  # (tail, head, edge id)

    def add_edge(self, u: int, v: int, length: float, cost: float = 1.0) -> int:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InputError(f"edge ({u},{v}) references an invalid vertex id")
        if u == v:
            raise InputError(f"self-loop at vertex {u} is not allowed")
        if not length > 0:
            raise InputError(f"edge ({u},{v}) has non-positive length {length}")
        if not (cost > 0 or cost == UNREMOVABLE):
            raise InputError(f"edge ({u},{v}) has non-positive cost {cost}")
        eid = len(self.edge_lengths)
        self.edge_lengths.append(float(length))
        self.edge_costs.append(float(cost))
        self.adj[u].append((v, eid))
        self.arcs.append((u, v, eid))
        if not self.directed:
            self.adj[v].append((u, eid))
            self.arcs.append((v, u, eid))
        return eid

    def set_vertex_cost(self, v: int, cost: float) -> None:
        if not (0 <= v < self.n):
            raise InputError(f"invalid vertex id {v}")
        if not (cost > 0 or cost == UNREMOVABLE):
            raise InputError(f"vertex {v} has non-positive cost {cost}")
        self.vertex_costs[v] = float(cost)

    @property
    def num_edges(self) -> int:
        return len(self.edge_lengths)

    @property
    def q_min(self) -> float:
        if not self.edge_lengths:
            return math.inf
        return min(self.edge_lengths)

    def element_cost(self, element: int, mode: str) -> float:
        if mode == VERTEX:
            return self.vertex_costs[element]
        return self.edge_costs[element]

    def degree(self, v: int) -> int:
        """Total degree: out-arcs plus, for directed graphs, in-arcs."""
        if not self.directed:
            return len(self.adj[v])
        return len(self.adj[v]) + sum(1 for (_, head, _) in self.arcs if head == v)

    def max_degree(self) -> int:
        if self.directed:
            indeg = [0] * self.n
            for _, head, _ in self.arcs:
                indeg[head] += 1
            return max(len(self.adj[v]) + indeg[v] for v in range(self.n))
        return max(len(self.adj[v]) for v in range(self.n))


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise InputError(f"invalid vertex id {v}")


def shortest_distance(g: Graph, u: int, v: int, removed=frozenset(), mode: str = VERTEX) -> float:
    """d-weighted shortest-path distance with ``removed`` elements deleted.

    Removal is a membership filter at expansion time; the graph itself is
    never mutated.  A removed vertex has infinite distance to everything.
    """
    dist = shortest_path(g, u, v, removed, mode)[0]
    return dist


def shortest_path(g: Graph, u: int, v: int, removed=frozenset(), mode: str = VERTEX):
    """Like :func:`shortest_distance` but also returns the vertex/edge lists.

    Returns ``(dist, vertices, edges)``; on disconnection ``(inf, None, None)``.
    """
    _check_vertex(g, u)
    _check_vertex(g, v)
    removed = frozenset(removed)
    if mode == VERTEX and (u in removed or v in removed):
        return math.inf, None, None
    if u == v:
        return 0.0, [u], []
    dist = {u: 0.0}
    parent: dict[int, tuple[int, int]] = {}
    heap = [(0.0, u)]
    while heap:
        d, x = heapq.heappop(heap)
        if d > dist.get(x, math.inf):
            continue
        if x == v:
            verts = [v]
            edges = []
            cur = v
            while cur != u:
                prev, eid = parent[cur]
                edges.append(eid)
                verts.append(prev)
                cur = prev
            verts.reverse()
            edges.reverse()
            return d, verts, edges
        for head, eid in g.adj[x]:
            if mode == VERTEX:
                if head in removed:
                    continue
            elif eid in removed:
                continue
            nd = d + g.edge_lengths[eid]
            if nd < dist.get(head, math.inf):
                dist[head] = nd
                parent[head] = (x, eid)
                heapq.heappush(heap, (nd, head))
    return math.inf, None, None


@dataclass(frozen=True)
class PseudocutInstance:
    """A pseudocut problem: separate every target pair beyond threshold T.

    In vertex mode with a single pair the endpoints are automatically added
    to ``forbidden`` (the single-pair problem disallows them); with several
    pairs, pair members are removable by default.
    """

    graph: Graph
    T: float
    targets: tuple[tuple[int, int], ...]
    mode: str = VERTEX
    forbidden: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple((int(s), int(t)) for s, t in self.targets))
        forbidden = frozenset(self.forbidden)
        if self.mode not in (VERTEX, EDGE):
            raise InputError(f"unknown mode {self.mode!r}")
        if not self.targets:
            raise InputError("at least one target pair is required")
        if len(set(self.targets)) != len(self.targets):
            raise InputError("target pairs must be distinct")
        if self.mode == VERTEX and len(self.targets) == 1:
            s, t = self.targets[0]
            forbidden = forbidden | {s, t}
        object.__setattr__(self, "forbidden", forbidden)

    @property
    def k(self) -> int:
        return len(self.targets)

    @property
    def hop_bound(self) -> int:
        """T0 = floor(T / q_min): max edge count of a path with length <= T."""
        return int(math.floor(self.T / self.graph.q_min))

    def removable_elements(self) -> list[int]:
        """Element ids that may enter a solution (finite cost, not forbidden)."""
        g = self.graph
        if self.mode == VERTEX:
            universe = range(g.n)
            costs = g.vertex_costs
        else:
            universe = range(g.num_edges)
            costs = g.edge_costs
        return [e for e in universe if e not in self.forbidden and costs[e] != UNREMOVABLE]


@dataclass(frozen=True)
class Solution:
    """An element set together with bookkeeping about how it was found."""

    elements: frozenset[int]
    cost: float
    feasible: bool
    algorithm: str
    seed: int | None = None
    elapsed_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "elements": sorted(self.elements),
            "cost": self.cost,
            "feasible": self.feasible,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }


def solution_cost(inst: PseudocutInstance, elements) -> float:
    g = inst.graph
    if inst.mode == VERTEX:
        return sum(g.vertex_costs[e] for e in elements)
    return sum(g.edge_costs[e] for e in elements)


def is_feasible(inst: PseudocutInstance, w) -> bool:
    """True iff every target pair has distance strictly greater than T after removal."""
    w = frozenset(w)
    bad = w & inst.forbidden
    if bad:
        raise ForbiddenElementError(f"solution uses forbidden elements {sorted(bad)}")
    for s, t in inst.targets:
        if shortest_distance(inst.graph, s, t, w, inst.mode) <= inst.T:
            return False
    return True


def validate(inst: PseudocutInstance) -> list[str]:
    """Structural diagnostics; an empty list means the instance is well formed.

    Also detects infeasibility: if removing every removable element still
    leaves some pair within distance T (e.g. a direct s->t edge in vertex
    mode), no solution can exist.
    """
    diags: list[str] = []
    g = inst.graph
    if inst.T <= 0:
        diags.append(f"threshold T={inst.T} must be positive")
    for i, (s, t) in enumerate(inst.targets):
        if not (0 <= s < g.n and 0 <= t < g.n):
            diags.append(f"pair {i}: invalid vertex id in ({s},{t})")
        elif s == t:
            diags.append(f"pair {i}: s == t == {s}")
    if diags:
        return diags
    if g.num_edges and not g.q_min > 0:
        diags.append("q_min must be positive")
        return diags
    everything = frozenset(inst.removable_elements())
    for i, (s, t) in enumerate(inst.targets):
        if shortest_distance(g, s, t, everything, inst.mode) <= inst.T:
            diags.append(
                f"pair {i} ({s},{t}): infeasible, distance stays <= T even after "
                "removing every removable element"
            )
    return diags
