"""Graph families and transforms used as fixtures and stress inputs."""

from __future__ import annotations

import random
from fractions import Fraction

from .cliques import iter_cliques
from .fcalc import _bits
from .graph_core import Graph, GraphError, VertexFunction, build_graph

__all__ = [
    "FAMILIES",
    "generate",
    "complete",
    "cycle",
    "path",
    "star",
    "wheel",
    "erdos_renyi",
    "torus_16",
    "barycentric",
    "dimension_function",
    "join",
]


def complete(m: int) -> Graph:
    return build_graph(m, ((i, j) for i in range(m) for j in range(i + 1, m)))


def cycle(n: int) -> Graph:
    return build_graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return build_graph(n, ((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Graph:
    """Center 0 joined to leaves ``1..n-1``."""
    return build_graph(n, ((0, i) for i in range(1, n)))


def wheel(n: int) -> Graph:
    """Hub 0 over the rim cycle ``1..n``; ``n + 1`` vertices."""
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return build_graph(n + 1, rim + [(0, i) for i in range(1, n + 1)])


# name -> (constructor, smallest allowed parameter)
FAMILIES = {
    "complete": (complete, 1),
    "cycle": (cycle, 3),
    "path": (path, 1),
    "star": (star, 1),
    "wheel": (wheel, 3),
}


def generate(kind: str, n: int) -> Graph:
    try:
        make, low = FAMILIES[kind]
    except KeyError:
        raise GraphError(f"unknown family {kind!r}; choose from {sorted(FAMILIES)}") from None
    if n < low:
        raise GraphError(f"{kind} needs a size parameter >= {low}, got {n}")
    return make(n)


def erdos_renyi(n: int, p: float | Fraction, seed: int) -> Graph:
    """Each of the ``C(n, 2)`` edges kept independently with probability p."""
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    p = float(p)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def torus_16() -> Graph:
    """4x4 grid with wraparound, triangulated by the (+1, +1) diagonal."""
    def vid(r, c):
        return 4 * (r % 4) + c % 4

    edges = []
    for r in range(4):
        for c in range(4):
            v = vid(r, c)
            edges += [(v, vid(r, c + 1)), (v, vid(r + 1, c)), (v, vid(r + 1, c + 1))]
    return build_graph(16, edges)


def barycentric(G: Graph) -> tuple[Graph, VertexFunction]:
    """Barycentric refinement and an injective dimension-ordered rank.

    Vertices of the refinement are the cliques of ``G`` as tuples of ids in
    ``G``'s vertex order; two are adjacent when one contains the other.  The
    returned ranks order vertices by dimension, ties broken by clique order,
    so they induce the same sub-level sets as :func:`dimension_function`.
    """
    adj = G.masks()
    verts = G.vertices
    cliques = list(iter_cliques(adj, (1 << G.n) - 1))
    cliques.sort(key=lambda c: (c.bit_count(), _bits(c)))
    ids = {c: tuple(verts[i] for i in _bits(c)) for c in cliques}
    nbrs: dict[tuple, set] = {ids[c]: set() for c in cliques}
    by_size: dict[int, list[int]] = {}
    for c in cliques:
        by_size.setdefault(c.bit_count(), []).append(c)
    for c in cliques:
        for size, group in by_size.items():
            if size >= c.bit_count():
                break
            for d in group:
                if d & c == d:
                    nbrs[ids[c]].add(ids[d])
                    nbrs[ids[d]].add(ids[c])
    G1 = Graph([ids[c] for c in cliques], nbrs)
    return G1, VertexFunction.from_order(G1.vertices)


def dimension_function(G1: Graph) -> VertexFunction:
    """Raw ``dim(x)`` on a barycentric refinement (locally injective only)."""
    return VertexFunction((x, len(x) - 1) for x in G1.vertices)


def join(G: Graph, H: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts.

    Vertices are relabeled ``0..|G|-1`` for ``G`` followed by
    ``|G|..|G|+|H|-1`` for ``H``, each in their original order.
    """
    a, b = G.relabeled(), H.relabeled()
    off = a.n
    edges = list(a.edges())
    edges += [(u + off, v + off) for u, v in b.edges()]
    edges += [(u, v + off) for u in range(a.n) for v in range(b.n)]
    return build_graph(a.n + b.n, edges)
