"""Intersection counts of simplices and the Wu characteristic.

For graphs ``G`` and ``H`` over a shared vertex-id universe, the f-matrix
``f_ij(G, H)`` counts pairs (x in G, y in H) of intersecting cliques with
``dim x = i`` and ``dim y = j``.  It is stored as the generating polynomial
``f_{G,H}(t, s) = sum f_ij t^i s^j`` (dimension exponents).  The listing
code of the original Mathematica uses cardinality exponents instead, which
multiplies everything by ``t s``; see :func:`to_cardinality_exponents`.
Both conventions give the Wu characteristic ``omega = f(-1, -1)``.
"""

from __future__ import annotations

import random
from collections import defaultdict
from fractions import Fraction
from typing import Mapping

from .cliques import iter_cliques
from .fcalc import InconsistencyError, derive_seed, _bits
from .graph_core import (
    Graph,
    NotLocallyInjective,
    induced,
    is_locally_injective,
    sub_level_ball,
    sub_level_sphere,
)
from .poly import BiPoly

__all__ = [
    "DEFAULT_CUTOFF",
    "enumerate_simplices",
    "f_matrix_bruteforce",
    "f_matrix_ph",
    "wu_characteristic",
    "wu_curvature",
    "pair_index",
    "integer_pair_index",
    "to_cardinality_exponents",
    "from_cardinality_exponents",
    "format_f_matrix_tsv",
]

DEFAULT_CUTOFF = 15


class _Universe:
    """Bit positions for the union of the vertex ids of two graphs."""

    def __init__(self, G: Graph, H: Graph):
        ids = list(G.vertices)
        seen = set(ids)
        ids.extend(v for v in H.vertices if v not in seen)
        self.ids = ids
        self.pos = {v: i for i, v in enumerate(ids)}
        self.adj_g = self._masks(G)
        self.adj_h = self._masks(H)
        self.mask_g = self.mask(G.vertices)
        self.mask_h = self.mask(H.vertices)

    def mask(self, vertices) -> int:
        m = 0
        for v in vertices:
            m |= 1 << self.pos[v]
        return m

    def _masks(self, G: Graph) -> list[int]:
        adj = [0] * len(self.ids)
        for v in G.vertices:
            adj[self.pos[v]] = self.mask(G.neighbors(v))
        return adj


def _dim_groups(adj, mask) -> dict[int, list[int]]:
    groups: dict[int, list[int]] = defaultdict(list)
    for c in iter_cliques(adj, mask):
        groups[c.bit_count() - 1].append(c)
    return groups


def _brute(adj_g, gmask, adj_h, hmask) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    if not gmask & hmask:
        return out
    ys = _dim_groups(adj_h, hmask)
    for x in iter_cliques(adj_g, gmask):
        i = x.bit_count() - 1
        for j, ylist in ys.items():
            cnt = 0
            for y in ylist:
                if x & y:
                    cnt += 1
            if cnt:
                out[(i, j)] = out.get((i, j), 0) + cnt
    return out


def enumerate_simplices(G: Graph) -> list[tuple]:
    """All cliques of ``G`` as id tuples, by dimension then vertex order."""
    verts = G.vertices
    cliques = [tuple(verts[i] for i in _bits(c)) for c in iter_cliques(G.masks(), (1 << G.n) - 1)]
    idx = G.index_of
    cliques.sort(key=lambda c: (len(c), [idx(v) for v in c]))
    return cliques


def f_matrix_bruteforce(G: Graph, H: Graph | None = None) -> BiPoly:
    """Count intersecting simplex pairs directly."""
    H = G if H is None else H
    u = _Universe(G, H)
    return BiPoly(_brute(u.adj_g, u.mask_g, u.adj_h, u.mask_h))


def wu_characteristic(G: Graph, H: Graph | None = None) -> int:
    """``sum (-1)^(dim x + dim y)`` over intersecting pairs x in G, y in H."""
    H = G if H is None else H
    u = _Universe(G, H)
    ys = list(iter_cliques(u.adj_h, u.mask_h))
    total = 0
    for x in iter_cliques(u.adj_g, u.mask_g):
        sx = -1 if x.bit_count() % 2 == 0 else 1
        for y in ys:
            if x & y:
                total += sx if y.bit_count() % 2 else -sx
    return total


def wu_curvature(G: Graph, v) -> Fraction:
    """Share of the Wu characteristic carried by ``v``.

    Each intersecting pair (x, y) with ``v in x`` contributes
    ``omega(x) omega(y) / |x|`` where ``|x|`` is the number of vertices of x,
    so summing over all vertices recovers ``omega(G)``.
    """
    adj = G.masks()
    full = (1 << G.n) - 1
    bit = 1 << G.index_of(v)
    ys = list(iter_cliques(adj, full))
    total = Fraction(0)
    for x in ys:
        if not x & bit:
            continue
        card = x.bit_count()
        sx = 1 if card % 2 else -1
        acc = 0
        for y in ys:
            if x & y:
                acc += sx if y.bit_count() % 2 else -sx
        total += Fraction(acc, card)
    return total


def _require(G: Graph, g: Mapping) -> None:
    if not is_locally_injective(G, g):
        raise NotLocallyInjective("vertex function is not locally injective")


def pair_index(G: Graph, H: Graph, g: Mapping, h: Mapping, v, w) -> BiPoly:
    """Four-term inclusion-exclusion over sub-level balls and spheres.

    Counts exactly the intersecting pairs (x, y) where ``v`` is the top
    vertex of ``x`` under ``g`` and ``w`` is the top vertex of ``y`` under
    ``h``.
    """
    _require(G, g)
    _require(H, h)
    bv, sv = sub_level_ball(G, g, v), sub_level_sphere(G, g, v)
    bw, sw = sub_level_ball(H, h, w), sub_level_sphere(H, h, w)
    return (
        f_matrix_bruteforce(bv, bw)
        - f_matrix_bruteforce(bv, sw)
        - f_matrix_bruteforce(sv, bw)
        + f_matrix_bruteforce(sv, sw)
    )


def integer_pair_index(G: Graph, H: Graph, g: Mapping, h: Mapping, v, w) -> int:
    return pair_index(G, H, g, h, v, w)(-1, -1)


def _accumulate(acc: dict, terms: dict, sign: int = 1) -> None:
    for k, c in terms.items():
        acc[k] = acc.get(k, 0) + sign * c


def _swap(terms: dict) -> dict:
    return {(j, i): c for (i, j), c in terms.items()}


class _PHMatrix:
    """Recursive f-matrix evaluation on bit masks of a fixed universe."""

    def __init__(self, u: _Universe, seed: int, cutoff: int, same: bool, memo: bool, debug: bool):
        self.u = u
        self.seed = seed
        self.cutoff = cutoff
        self.same = same
        self.memo: dict | None = {} if memo else None
        self.debug = debug

    def _lower(self, adj, mask) -> dict[int, int]:
        """Sub-level sphere mask of every vertex under a fresh ordering."""
        order = _bits(mask)
        random.Random(derive_seed(self.seed, mask)).shuffle(order)
        below = 0
        spheres = {}
        for x in order:
            spheres[x] = adj[x] & below
            below |= 1 << x
        return spheres

    def brute(self, gmask, hmask):
        return _brute(self.u.adj_g, gmask, self.u.adj_h, hmask)

    def __call__(self, gmask: int, hmask: int) -> dict:
        if not gmask & hmask:
            return {}
        if max(gmask.bit_count(), hmask.bit_count()) <= self.cutoff:
            return self.brute(gmask, hmask)
        key = (gmask, hmask)
        if self.memo is not None and key in self.memo:
            return self.memo[key]
        same = self.same and gmask == hmask
        sg = self._lower(self.u.adj_g, gmask)
        sh = sg if same else self._lower(self.u.adj_h, hmask)
        if same:
            result = self._symmetric_sum(gmask, sg)
            if self.debug:
                full = self._pair_sum(gmask, hmask, sg, sh)
                if {k: c for k, c in full.items() if c} != result:
                    raise InconsistencyError("symmetrised pair sum differs from the full double sum")
        else:
            result = self._pair_sum(gmask, hmask, sg, sh)
        if self.memo is not None:
            self.memo[key] = result
        return result

    def _term(self, gmask, hmask, v, sv, w, sw) -> dict:
        bv, bw = sv | (1 << v), sw | (1 << w)
        if not bv & bw:
            return {}
        acc: dict = {}
        # the ball-ball term can be the whole problem again (both apexes on top)
        if (bv, bw) == (gmask, hmask):
            _accumulate(acc, self.brute(bv, bw))
        else:
            _accumulate(acc, self(bv, bw))
        _accumulate(acc, self(bv, sw), -1)
        _accumulate(acc, self(sv, bw), -1)
        _accumulate(acc, self(sv, sw))
        return acc

    def _pair_sum(self, gmask, hmask, sg, sh) -> dict:
        acc: dict = {}
        for v, sv in sg.items():
            for w, sw in sh.items():
                _accumulate(acc, self._term(gmask, hmask, v, sv, w, sw))
        return {k: c for k, c in acc.items() if c}

    def _symmetric_sum(self, mask, sg) -> dict:
        acc: dict = {}
        items = sorted(sg.items())
        for a, (v, sv) in enumerate(items):
            for w, sw in items[a:]:
                term = self._term(mask, mask, v, sv, w, sw)
                _accumulate(acc, term)
                if w != v:
                    _accumulate(acc, _swap(term))
        return {k: c for k, c in acc.items() if c}


def f_matrix_ph(
    G: Graph,
    H: Graph | None = None,
    seed: int = 0,
    *,
    cutoff: int = DEFAULT_CUTOFF,
    memo: bool = True,
    debug: bool = False,
) -> BiPoly:
    """f-matrix by summing pair indices over all vertex pairs, recursively.

    Problems where both graphs have at most ``cutoff`` vertices are counted
    directly; ``cutoff=0`` recurses all the way down.  Vertex functions are
    redrawn per subproblem from ``(seed, vertex set)``.  When ``H`` is ``G``
    the double sum runs over ``v <= w`` only and mirrors the rest; ``debug``
    cross-checks that against the full sum.
    """
    same = H is None or H is G or H == G
    H = G if H is None else H
    u = _Universe(G, H)
    engine = _PHMatrix(u, seed, cutoff, same, memo, debug)
    return BiPoly(engine(u.mask_g, u.mask_h))


def to_cardinality_exponents(p: BiPoly) -> BiPoly:
    """Dimension exponents -> vertex-count exponents (multiply by ``t s``)."""
    return p.shift(1, 1)


def from_cardinality_exponents(p: BiPoly) -> BiPoly:
    if any(i == 0 or j == 0 for i, j in p.terms):
        raise ValueError("cardinality-exponent polynomial has a term without t or s")
    return p.shift(-1, -1)


def format_f_matrix_tsv(p: BiPoly) -> str:
    """Dense matrix, rows = dimension in G, columns = dimension in H."""
    return "".join("\t".join(str(c) for c in row) + "\n" for row in p.to_matrix())
