"""Text file formats: graphs, vertex costs, target pairs, solutions.

Graph format (UTF-8, ``#`` starts a comment):

    n m directed|undirected
    u v length [edge_cost]     # m of these, 0-based ids, decimal lengths

Missing costs default to 1.  A vertex-cost file holds ``v cost`` lines; the
literal ``inf`` marks an unremovable element.  A targets file holds ``s t``
lines.  Lengths are serialized as decimal strings and re-parsed identically,
which is what makes generated graphs byte-reproducible.
"""

from __future__ import annotations

import json

from .errors import InputError
from .graph import UNREMOVABLE, Graph


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_cost(token: str) -> float:
    if token.lower() in ("inf", "infinity"):
        return UNREMOVABLE
    return float(token)


def parse_graph(text: str) -> Graph:
    lines = list(_data_lines(text))
    if not lines:
        raise InputError("empty graph file")
    header = lines[0][1].split()
    if len(header) != 3 or header[2] not in ("directed", "undirected"):
        raise InputError(f"bad header {lines[0][1]!r}, expected 'n m directed|undirected'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise InputError(f"bad header {lines[0][1]!r}") from exc
    g = Graph(n, directed=(header[2] == "directed"))
    body = lines[1:]
    if len(body) != m:
        raise InputError(f"expected {m} edge lines, found {len(body)}")
    for lineno, line in body:
        parts = line.split()
        if len(parts) not in (3, 4):
            raise InputError(f"line {lineno}: expected 'u v length [edge_cost]'")
        try:
            u, v = int(parts[0]), int(parts[1])
            length = float(parts[2])
            cost = _parse_cost(parts[3]) if len(parts) == 4 else 1.0
        except ValueError as exc:
            raise InputError(f"line {lineno}: {exc}") from exc
        g.add_edge(u, v, length, cost)
    return g


def load_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(g: Graph) -> str:
    kind = "directed" if g.directed else "undirected"
    out = [f"{g.n} {g.num_edges} {kind}"]
    seen = set()
    for u, v, eid in g.arcs:
        if eid in seen:
            continue  # second arc of an undirected edge
        seen.add(eid)
        cost = g.edge_costs[eid]
        line = f"{u} {v} {g.edge_lengths[eid]!r}"
        if cost != 1.0:
            line += " inf" if cost == UNREMOVABLE else f" {cost!r}"
        out.append(line)
    return "\n".join(out) + "\n"


def save_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))


def load_vertex_costs(path, g: Graph) -> None:
    with open(path, encoding="utf-8") as fh:
        for lineno, line in _data_lines(fh.read()):
            parts = line.split()
            if len(parts) != 2:
                raise InputError(f"line {lineno}: expected 'v cost'")
            g.set_vertex_cost(int(parts[0]), _parse_cost(parts[1]))


def parse_targets(text: str) -> list[tuple[int, int]]:
    pairs = []
    for lineno, line in _data_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 's t'")
        pairs.append((int(parts[0]), int(parts[1])))
    if not pairs:
        raise InputError("empty targets file")
    return pairs


def load_targets(path) -> list[tuple[int, int]]:
    with open(path, encoding="utf-8") as fh:
        return parse_targets(fh.read())


def save_targets(pairs, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for s, t in pairs:
            fh.write(f"{s} {t}\n")


def load_solution_elements(path) -> frozenset[int]:
    """Accepts either a solve JSON record or whitespace-separated element ids."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.strip()
    if stripped.startswith("{"):
        record = json.loads(stripped)
        if "elements" not in record:
            raise InputError("solution JSON lacks an 'elements' field")
        return frozenset(int(e) for e in record["elements"])
    if not stripped:
        return frozenset()
    try:
        return frozenset(int(tok) for tok in stripped.split())
    except ValueError as exc:
        raise InputError(f"unparsable solution file: {exc}") from exc
