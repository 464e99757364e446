"""Classical vertex-cut baseline and the packet-error-rate transform.

The minimum vertex separator is computed by node splitting (v -> v_in, v_out
with the split arc carrying the vertex cost; original arcs get infinite
capacity) and a blocking-flow max-flow; the cut is read off the final
residual reachability.  Packet error rates p become additive lengths via
-ln(1 - p), so path products of success probabilities turn into shortest
paths.
"""

from __future__ import annotations

import math
import time
from collections import deque

from .errors import InputError, NoFiniteCutError
from .graph import UNREMOVABLE, Graph, Solution, shortest_distance

_INF = math.inf


class _Dinic:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[float] = []

    def add(self, u: int, v: int, cap: float) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0.0)

    def max_flow(self, s: int, t: int) -> float:
        flow = 0.0
        while True:
            level = [-1] * self.n
            level[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for a in self.head[u]:
                    v = self.to[a]
                    if self.cap[a] > 1e-12 and level[v] < 0:
                        level[v] = level[u] + 1
                        q.append(v)
            if level[t] < 0:
                return flow
            it = [0] * self.n

            def dfs(u: int, limit: float) -> float:
                if u == t:
                    return limit
                while it[u] < len(self.head[u]):
                    a = self.head[u][it[u]]
                    v = self.to[a]
                    if self.cap[a] > 1e-12 and level[v] == level[u] + 1:
                        pushed = dfs(v, min(limit, self.cap[a]))
                        if pushed > 0:
                            self.cap[a] -= pushed
                            self.cap[a ^ 1] += pushed
                            return pushed
                    it[u] += 1
                return 0.0

            while True:
                pushed = dfs(s, _INF)
                if pushed <= 0:
                    break
                flow += pushed

    def residual_reachable(self, s: int) -> set[int]:
        seen = {s}
        q = deque([s])
        while q:
            u = q.popleft()
            for a in self.head[u]:
                v = self.to[a]
                if self.cap[a] > 1e-9 and v not in seen:
                    seen.add(v)
                    q.append(v)
        return seen


def min_vertex_cut(g: Graph, s: int, t: int) -> Solution:
    """Minimum-cost vertex set (excluding s, t) disconnecting s from t.

    With uniform vertex costs this is the classical minimum vertex separator.
    Removal costs of infinity make a vertex uncuttable.
    """
    start = time.monotonic()
    if not (0 <= s < g.n and 0 <= t < g.n) or s == t:
        raise InputError(f"bad cut endpoints ({s},{t})")
    if any(head == t for head, _ in g.adj[s]):
        raise NoFiniteCutError(f"direct edge ({s},{t}): no finite vertex cut exists")
    # Finite stand-in for infinity: larger than any finite cut can cost, and
    # safe inside the flow arithmetic (inf capacities would produce inf - inf).
    big = sum(c for c in g.vertex_costs if c != UNREMOVABLE) + 1.0
    net = _Dinic(2 * g.n)
    for v in range(g.n):
        cap = big if v in (s, t) or g.vertex_costs[v] == UNREMOVABLE else g.vertex_costs[v]
        net.add(2 * v, 2 * v + 1, cap)  # v_in -> v_out
    seen_arcs = set()
    for u, v, eid in g.arcs:
        if (u, v) in seen_arcs:
            continue
        seen_arcs.add((u, v))
        net.add(2 * u + 1, 2 * v, big)  # u_out -> v_in
    flow = net.max_flow(2 * s + 1, 2 * t)
    if flow >= big - 1e-9:
        raise NoFiniteCutError(
            f"every ({s},{t}) vertex cut uses an unremovable vertex"
        )
    reach = net.residual_reachable(2 * s + 1)
    cut = frozenset(v for v in range(g.n) if 2 * v in reach and 2 * v + 1 not in reach)
    cost = sum(g.vertex_costs[v] for v in cut)
    feasible = shortest_distance(g, s, t, cut) == _INF
    elapsed = int((time.monotonic() - start) * 1000)
    return Solution(cut, cost, feasible, "MC", None, elapsed)


def per_to_length(p: float) -> float:
    """Additive length of a link with packet error rate p: -ln(1 - p)."""
    if not 0 < p < 1:
        raise InputError(f"packet error rate {p} outside (0,1)")
    return -math.log1p(-p)


def per_threshold(P: float) -> float:
    """Length threshold equivalent to cumulative error-rate threshold P."""
    if not 0 < P < 1:
        raise InputError(f"error-rate threshold {P} outside (0,1)")
    return -math.log1p(-P)


def transform_per_graph(g: Graph) -> Graph:
    """Copy of g with each edge 'length' (holding an error rate) transformed."""
    out = Graph(g.n, directed=g.directed)
    seen = set()
    for u, v, eid in g.arcs:
        if eid in seen:
            continue  # second arc of an undirected edge
        seen.add(eid)
        out.add_edge(u, v, per_to_length(g.edge_lengths[eid]), g.edge_costs[eid])
    out.vertex_costs = list(g.vertex_costs)
    return out


def cumulative_per(g: Graph, s: int, t: int) -> float:
    """Lowest cumulative packet error rate between s and t.

    Edge lengths of ``g`` are interpreted as per-link error rates; equals the
    complement of the best path product of per-link success probabilities.
    """
    d = shortest_distance(transform_per_graph(g), s, t)
    if d == _INF:
        return 1.0
    return -math.expm1(-d)
