"""Topology and instance generators, plus target-pair selection schemes.

All generators are pure functions of (parameters, seed): the same inputs
yield the same graph, byte for byte once serialized.  Random topologies are
undirected with edge lengths drawn uniformly from [1, 10] unless asked for
unit lengths; the adversarial constructions are directed with unit lengths.
"""

from __future__ import annotations

import bisect
import math
import random
from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, PseudocutInstance


def _draw_length(rng: random.Random, unit_lengths: bool, integer_weights: bool) -> float:
    if unit_lengths:
        return 1.0
    if integer_weights:
        return float(rng.randint(1, 10))
    return rng.uniform(1.0, 10.0)


def gen_er(
    n: int,
    m: int,
    seed: int,
    unit_lengths: bool = False,
    integer_weights: bool = False,
) -> Graph:
    """Uniform random simple undirected graph with exactly m edges."""
    total = n * (n - 1) // 2
    if m > total:
        raise InputError(f"m={m} exceeds the {total} possible edges on {n} vertices")
    rng = random.Random(seed)
    offsets = [i * (n - 1) - i * (i - 1) // 2 for i in range(n)]
    g = Graph(n, directed=False)
    for idx in sorted(rng.sample(range(total), m)):
        i = bisect.bisect_right(offsets, idx) - 1
        j = i + 1 + (idx - offsets[i])
        g.add_edge(i, j, _draw_length(rng, unit_lengths, integer_weights))
    return g


def _positions(rng: random.Random, n: int) -> list[tuple[float, float]]:
    return [(rng.random(), rng.random()) for _ in range(n)]


def _dist(a, b) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def _components(n: int, pairs) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return [find(v) for v in range(n)]


def gen_waxman(
    n: int,
    m_target: int,
    alpha_w: float = 0.15,
    beta_w: float = 0.4,
    seed: int = 0,
    unit_lengths: bool = False,
    integer_weights: bool = False,
) -> Graph:
    """Waxman-style geometric random graph with roughly m_target edges.

    Nodes are placed uniformly in the unit square; a candidate pair (u,v) is
    accepted with probability beta_w * exp(-dist/(alpha_w * dist_max)).
    Afterwards any remaining components are stitched together through their
    nearest cross-component node pairs, so the result is connected.
    """
    if n < 1 or m_target < 0 or alpha_w <= 0 or beta_w <= 0:
        raise InputError("waxman parameters must be positive")
    rng = random.Random(seed)
    pos = _positions(rng, n)
    dist_max = max(
        (_dist(pos[i], pos[j]) for i in range(n) for j in range(i + 1, n)),
        default=1.0,
    ) or 1.0
    chosen: set[tuple[int, int]] = set()
    attempts = 0
    cap = 200 * max(m_target, 1) + 10_000
    while len(chosen) < m_target and attempts < cap and len(chosen) < n * (n - 1) // 2:
        attempts += 1
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        pair = (min(u, v), max(u, v))
        if pair in chosen:
            continue
        if rng.random() < beta_w * math.exp(-_dist(pos[u], pos[v]) / (alpha_w * dist_max)):
            chosen.add(pair)

    # Connectivity patch: repeatedly add the closest pair spanning two components.
    while True:
        comp = _components(n, chosen)
        roots = set(comp)
        if len(roots) <= 1:
            break
        best = None
        for u in range(n):
            for v in range(u + 1, n):
                if comp[u] != comp[v]:
                    d = _dist(pos[u], pos[v])
                    if best is None or d < best[0]:
                        best = (d, u, v)
        chosen.add((best[1], best[2]))

    g = Graph(n, directed=False)
    for u, v in sorted(chosen):
        g.add_edge(u, v, _draw_length(rng, unit_lengths, integer_weights))
    return g


def gen_hier(
    num_as: int,
    routers_per_as: int,
    seed: int = 0,
    alpha_w: float = 0.15,
    beta_w: float = 0.4,
    unit_lengths: bool = False,
) -> Graph:
    """Two-level topology: a Waxman AS graph whose nodes expand to Waxman subgraphs.

    Each AS-level edge becomes one link between random border routers of the
    two systems.
    """
    rng = random.Random(seed)
    as_graph = gen_waxman(num_as, 2 * num_as, alpha_w, beta_w, seed=rng.randrange(2**32))
    n = num_as * routers_per_as
    g = Graph(n, directed=False)
    for a in range(num_as):
        sub = gen_waxman(
            routers_per_as, 2 * routers_per_as, alpha_w, beta_w, seed=rng.randrange(2**32)
        )
        base = a * routers_per_as
        seen = set()
        for u, v, eid in sub.arcs:
            if eid in seen:
                continue
            seen.add(eid)
            g.add_edge(base + u, base + v, _draw_length(rng, unit_lengths, False))
    seen = set()
    for a, b, eid in as_graph.arcs:
        if eid in seen:
            continue
        seen.add(eid)
        u = a * routers_per_as + rng.randrange(routers_per_as)
        v = b * routers_per_as + rng.randrange(routers_per_as)
        g.add_edge(u, v, _draw_length(rng, unit_lengths, False))
    return g


def gen_tightness(k: int) -> tuple[Graph, PseudocutInstance]:
    """Worst-case family for the greedy solver (threshold 5, unit lengths).

    s feeds hub nodes g_1..g_k; each g_i reaches both outlets o_1, o_2
    through 2^(i-1) disjoint two-edge paths; the outlets feed t.  Greedy
    removes all k hubs while {o_1, o_2} is optimal.
    """
    if k < 1:
        raise InputError("k must be at least 1")
    s = 0
    hubs = list(range(1, k + 1))
    o1, o2 = k + 1, k + 2
    t = k + 3
    n = k + 4 + 2 * (2**k - 1)
    g = Graph(n, directed=True)
    nxt = k + 4
    for gi in hubs:
        g.add_edge(s, gi, 1.0)
        for outlet in (o1, o2):
            for _ in range(2 ** (gi - 1)):
                mid = nxt
                nxt += 1
                g.add_edge(gi, mid, 1.0)
                g.add_edge(mid, outlet, 1.0)
    g.add_edge(o1, t, 1.0)
    g.add_edge(o2, t, 1.0)
    inst = PseudocutInstance(g, 5.0, ((s, t),))
    return g, inst


FIG1_ARCS = (
    (0, 5), (5, 6), (6, 7), (7, 12),
    (0, 3), (3, 4), (4, 6), (6, 9), (9, 11), (11, 12),
    (5, 8), (8, 10), (10, 12),
    (0, 1), (1, 2), (2, 7),
)


def gen_fig1() -> tuple[Graph, PseudocutInstance]:
    """The 13-vertex motivating instance: threshold 5, pair (0, 12), unit costs."""
    g = Graph(13, directed=True)
    for u, v in FIG1_ARCS:
        g.add_edge(u, v, 1.0)
    return g, PseudocutInstance(g, 5.0, ((0, 12),))


@dataclass(frozen=True)
class TargetScheme:
    """How to draw target pairs: both-random (RR) or degree-class restricted.

    H holds vertices of degree at least zeta * max_degree, L those of degree
    at most (1 - zeta) * max_degree.  HH/HL/LL draw s and t from the named
    classes; RR ignores zeta.
    """

    kind: str  # RR | HH | HL | LL
    zeta: float
    k: int
    seed: int

    def __post_init__(self):
        if self.kind not in ("RR", "HH", "HL", "LL"):
            raise InputError(f"unknown target scheme {self.kind!r}")
        if not 0 < self.zeta < 1:
            raise InputError("zeta must lie in (0,1)")
        if self.k < 1:
            raise InputError("k must be at least 1")


def gen_targets(g: Graph, scheme: TargetScheme) -> list[tuple[int, int]]:
    """Draw k distinct ordered pairs per the scheme, by rejection sampling."""
    rng = random.Random(scheme.seed)
    if g.directed:
        indeg = [0] * g.n
        for _, head, _ in g.arcs:
            indeg[head] += 1
        deg = [len(g.adj[v]) + indeg[v] for v in range(g.n)]
    else:
        deg = [len(g.adj[v]) for v in range(g.n)]
    delta = max(deg)
    classes = {
        "R": list(range(g.n)),
        "H": [v for v in range(g.n) if deg[v] >= scheme.zeta * delta],
        "L": [v for v in range(g.n) if deg[v] <= (1 - scheme.zeta) * delta],
    }
    for name in set(scheme.kind) - {"R"}:
        if not classes[name]:
            raise InputError(f"degree class {name} is empty for zeta={scheme.zeta}")
    src = classes[scheme.kind[0]]
    dst = classes[scheme.kind[1]]
    possible = sum(1 for s in src for t in dst if s != t)
    if scheme.k > possible:
        raise InputError(f"k={scheme.k} exceeds the {possible} distinct pairs available")
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    while len(pairs) < scheme.k:
        s = src[rng.randrange(len(src))]
        t = dst[rng.randrange(len(dst))]
        if s == t or (s, t) in seen:
            continue
        seen.add((s, t))
        pairs.append((s, t))
    return pairs
