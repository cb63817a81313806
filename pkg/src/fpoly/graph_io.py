"""Reading and writing graphs as edge lists (``.el``) or JSON.

Edge-list format::

    # optional comments
    n m
    u v
    ...

with 0-based ids.  JSON format: ``{"n": N, "edges": [[u, v], ...]}``.
Writers sort edges lexicographically (``u < v`` within each pair), so a
read/write round trip is byte-stable.  Graphs with non-integer ids are
written after relabeling to vertex positions.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graph_core import Graph, GraphError, build_graph

__all__ = ["parse_edge_list", "format_edge_list", "parse_json", "format_json", "read_graph", "write_graph"]


def _canonical_edges(G: Graph) -> tuple[int, list[tuple[int, int]]]:
    if list(G.vertices) != list(range(G.n)):
        G = G.relabeled()
    edges = sorted((min(u, v), max(u, v)) for u, v in G.edges())
    return G.n, edges


def parse_edge_list(text: str) -> Graph:
    tokens: list[int] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        try:
            tokens.extend(int(tok) for tok in line.split())
        except ValueError as exc:
            raise GraphError(f"non-integer token in edge list: {exc}") from None
    if len(tokens) < 2:
        raise GraphError("edge list needs a header line 'n m'")
    n, m = tokens[0], tokens[1]
    body = tokens[2:]
    if len(body) != 2 * m:
        raise GraphError(f"header announces {m} edges but {len(body) / 2:g} were given")
    return build_graph(n, zip(body[0::2], body[1::2]))


def format_edge_list(G: Graph) -> str:
    n, edges = _canonical_edges(G)
    lines = [f"{n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_json(text: str) -> Graph:
    data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data:
        raise GraphError('JSON graph must be an object with keys "n" and "edges"')
    edges = data.get("edges", [])
    return build_graph(int(data["n"]), ((int(u), int(v)) for u, v in edges))


def format_json(G: Graph) -> str:
    n, edges = _canonical_edges(G)
    return json.dumps({"n": n, "edges": [list(e) for e in edges]}) + "\n"


def read_graph(path: str | Path) -> Graph:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        return parse_json(text)
    return parse_edge_list(text)


def write_graph(G: Graph, path: str | Path) -> None:
    path = Path(path)
    if path.suffix.lower() == ".json":
        path.write_text(format_json(G))
    else:
        path.write_text(format_edge_list(G))
