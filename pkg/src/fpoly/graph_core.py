"""Immutable finite simple graphs and the sphere constructions built on them.

A :class:`Graph` keeps an ordered tuple of opaque (hashable, mutually
orderable) vertex ids together with symmetric adjacency sets.  Induced
subgraphs keep the ids of their parent, so spheres of spheres can be
compared and cached by vertex set.

Vertex functions are integer rank assignments.  Only the order of the ranks
matters for every sub-level construction, so random functions are drawn as
permutations of ``0..n-1``.
"""

from __future__ import annotations

import random
from collections.abc import Hashable, Iterable, Iterator, Mapping

__all__ = [
    "Graph",
    "GraphError",
    "VertexNotFound",
    "MissingRank",
    "NotLocallyInjective",
    "VertexFunction",
    "build_graph",
    "from_adjacency",
    "induced",
    "unit_sphere",
    "unit_ball",
    "sub_level_sphere",
    "sub_level_ball",
    "random_vertex_function",
    "is_locally_injective",
]


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, out-of-range ids)."""


class VertexNotFound(KeyError):
    pass


class MissingRank(KeyError):
    pass


class NotLocallyInjective(ValueError):
    """A vertex function takes the same value at both ends of an edge."""


class Graph:
    """Immutable finite simple graph.

    Equality is structural: same vertex set and same edge set.  The vertex
    order is kept for deterministic iteration and for bit-mask indexing, but
    does not take part in comparisons.
    """

    __slots__ = ("_vertices", "_adj", "_index", "_masks", "_hash")

    def __init__(self, vertices: Iterable[Hashable], adjacency: Mapping[Hashable, Iterable[Hashable]]):
        verts = tuple(vertices)
        index = {v: i for i, v in enumerate(verts)}
        if len(index) != len(verts):
            raise GraphError("duplicate vertex ids")
        adj: dict = {}
        for v in verts:
            nbrs = frozenset(adjacency.get(v, ()))
            if v in nbrs:
                raise GraphError(f"self-loop at {v!r}")
            for u in nbrs:
                if u not in index:
                    raise GraphError(f"neighbor {u!r} of {v!r} is not a vertex")
            adj[v] = nbrs
        for v, nbrs in adj.items():
            for u in nbrs:
                if v not in adj[u]:
                    raise GraphError(f"adjacency is not symmetric at ({v!r}, {u!r})")
        self._vertices = verts
        self._adj = adj
        self._index = index
        self._masks = None
        self._hash = None

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def adjacency(self) -> Mapping:
        return self._adj

    @property
    def n(self) -> int:
        return len(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator:
        return iter(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def neighbors(self, v) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise VertexNotFound(v) from None

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u, v) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> list[tuple]:
        """Edges as ``(u, v)`` pairs with ``u`` before ``v`` in vertex order."""
        idx = self._index
        out = []
        for u in self._vertices:
            iu = idx[u]
            for v in self._adj[u]:
                if idx[v] > iu:
                    out.append((u, v))
        out.sort(key=lambda e: (idx[e[0]], idx[e[1]]))
        return out

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self._adj.values()) // 2

    def is_complete(self) -> bool:
        m = len(self._vertices)
        return self.num_edges == m * (m - 1) // 2

    def index_of(self, v) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise VertexNotFound(v) from None

    def masks(self) -> list[int]:
        """Neighborhoods as bit masks over vertex positions (cached)."""
        if self._masks is None:
            idx = self._index
            masks = []
            for v in self._vertices:
                m = 0
                for u in self._adj[v]:
                    m |= 1 << idx[u]
                masks.append(m)
            self._masks = masks
        return self._masks

    def vertices_of_mask(self, mask: int) -> list:
        verts = self._vertices
        out = []
        while mask:
            low = mask & -mask
            out.append(verts[low.bit_length() - 1])
            mask ^= low
        return out

    def mask_of(self, vertices: Iterable) -> int:
        m = 0
        for v in vertices:
            m |= 1 << self.index_of(v)
        return m

    # -- value semantics -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    def relabeled(self) -> "Graph":
        """Copy with ids replaced by their positions ``0..n-1``."""
        idx = self._index
        return Graph(range(self.n), {idx[v]: [idx[u] for u in nb] for v, nb in self._adj.items()})


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ids ``0..n-1``; duplicate edges collapse."""
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    adj: dict[int, set] = {v: set() for v in range(n)}
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(range(n), adj)


def from_adjacency(adjacency: Mapping[Hashable, Iterable[Hashable]]) -> Graph:
    """Graph from a neighbor mapping, symmetrised; vertices sorted."""
    adj: dict = {}
    for v, nbrs in adjacency.items():
        adj.setdefault(v, set())
        for u in nbrs:
            adj[v].add(u)
            adj.setdefault(u, set()).add(v)
    return Graph(sorted(adj), adj)


def _induced_unchecked(G: Graph, keep: set) -> Graph:
    verts = [v for v in G.vertices if v in keep]
    adj = G.adjacency
    return Graph(verts, {v: adj[v] & keep for v in verts})


def induced(G: Graph, S: Iterable) -> Graph:
    keep = set(S)
    for v in keep:
        if v not in G:
            raise VertexNotFound(v)
    return _induced_unchecked(G, keep)


def unit_sphere(G: Graph, v) -> Graph:
    return _induced_unchecked(G, set(G.neighbors(v)))


def unit_ball(G: Graph, v) -> Graph:
    return _induced_unchecked(G, set(G.neighbors(v)) | {v})


class VertexFunction(Mapping):
    """Integer ranks on vertices.

    Injectivity is not enforced here; the operations that need local
    injectivity check it themselves.
    """

    __slots__ = ("_ranks",)

    def __init__(self, ranks: Mapping[Hashable, int] | Iterable[tuple[Hashable, int]] = ()):
        self._ranks = dict(ranks)

    def __getitem__(self, v) -> int:
        try:
            return self._ranks[v]
        except KeyError:
            raise MissingRank(v) from None

    def __iter__(self):
        return iter(self._ranks)

    def __len__(self) -> int:
        return len(self._ranks)

    def __repr__(self) -> str:
        return f"VertexFunction({self._ranks!r})"

    @property
    def is_injective(self) -> bool:
        return len(set(self._ranks.values())) == len(self._ranks)

    @classmethod
    def from_order(cls, order: Iterable[Hashable]) -> "VertexFunction":
        """Ranks ``0, 1, 2, ...`` in the given order (first = lowest)."""
        return cls((v, i) for i, v in enumerate(order))


def _rank(g: Mapping, v) -> int:
    try:
        return g[v]
    except KeyError:
        raise MissingRank(v) from None


def _lower_neighbors(G: Graph, g: Mapping, v) -> set:
    rv = _rank(g, v)
    lower = set()
    for y in G.neighbors(v):
        ry = _rank(g, y)
        if ry == rv:
            raise NotLocallyInjective(f"g({v!r}) == g({y!r}) on an edge")
        if ry < rv:
            lower.add(y)
    return lower


def sub_level_sphere(G: Graph, g: Mapping, v) -> Graph:
    """Part of the unit sphere of ``v`` where ``g`` is below ``g(v)``."""
    return _induced_unchecked(G, _lower_neighbors(G, g, v))


def sub_level_ball(G: Graph, g: Mapping, v) -> Graph:
    return _induced_unchecked(G, _lower_neighbors(G, g, v) | {v})


def random_vertex_function(G: Graph, seed: int) -> VertexFunction:
    ranks = list(range(G.n))
    random.Random(seed).shuffle(ranks)
    return VertexFunction(zip(G.vertices, ranks))


def is_locally_injective(G: Graph, g: Mapping) -> bool:
    for u, v in G.edges():
        if _rank(g, u) == _rank(g, v):
            return False
    for v in G.vertices:
        _rank(g, v)
    return True
