"""f-functions, indices and curvatures of clique complexes.

Three independent routes to ``f_G(t) = 1 + f_0 t + ... + f_d t^(d+1)``:

* :func:`f_vector_bruteforce` lists every clique;
* :func:`f_function_gb` recurses on unit spheres,
  ``f_G = 1 + sum_x F_{S(x)}`` with ``F`` the antiderivative;
* :func:`f_function_ph` recurses on sub-level spheres of a random vertex
  ordering, ``f_G = 1 + t sum_x f_{S_g(x)}``.

The recursive routes work on bit masks over the vertex positions of the
top-level graph.  A fresh ordering is drawn for every subproblem from a seed
derived from ``(seed, vertex set)``, so the traversal does not depend on
evaluation order and results are identical for any worker count.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .cliques import clique_counts
from .graph_core import (
    Graph,
    NotLocallyInjective,
    is_locally_injective,
    sub_level_sphere,
    unit_sphere,
)
from .poly import FVector, RatPoly, UniPoly, antiderivative, binomial_poly, f_vector_to_poly

__all__ = [
    "InconsistencyError",
    "PermutationLimitExceeded",
    "IndexReport",
    "CurvatureReport",
    "DEFAULT_MEMO_CAP",
    "f_vector_bruteforce",
    "f_function_ph",
    "f_function_gb",
    "f_function",
    "f_vector",
    "index_poly",
    "integer_index",
    "index_report",
    "euler_characteristic",
    "curvature",
    "curvature_poly",
    "curvature_report",
    "exact_index_expectation",
    "verify_ph_identity",
]

DEFAULT_MEMO_CAP = 1 << 20
MAX_PERMUTATION_VERTICES = 9
ALGORITHMS = ("brute", "gb", "ph")


class InconsistencyError(RuntimeError):
    """An identity that must hold exactly did not; indicates a bug."""


class PermutationLimitExceeded(ValueError):
    pass


class _Memo(dict):
    """Plain dict that silently stops accepting entries once full."""

    def __init__(self, cap: int):
        super().__init__()
        self.cap = cap

    def put(self, key, value) -> None:
        if len(self) < self.cap:
            self[key] = value


def derive_seed(seed: int, *keys: int) -> int:
    h = hashlib.blake2b(str(seed).encode(), digest_size=8)
    for k in keys:
        h.update(b":")
        h.update(k.to_bytes((k.bit_length() + 8) // 8, "little", signed=True))
    return int.from_bytes(h.digest(), "little")


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _add_into(acc: list[int], coeffs: Sequence[int], offset: int = 0) -> None:
    need = len(coeffs) + offset
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for k, c in enumerate(coeffs):
        acc[k + offset] += c


def _complete_size(adj: Sequence[int], verts: list[int], mask: int) -> bool:
    m = len(verts)
    return sum((adj[x] & mask).bit_count() for x in verts) == m * (m - 1)


# -- Poincare-Hopf recursion ---------------------------------------------


def _ph(adj: Sequence[int], mask: int, seed: int, memo: _Memo | None, shortcut: bool) -> tuple[int, ...]:
    if not mask:
        return (1,)
    if memo is not None:
        hit = memo.get(mask)
        if hit is not None:
            return hit
    verts = _bits(mask)
    if shortcut and _complete_size(adj, verts, mask):
        return binomial_poly(len(verts)).coeffs
    # the shuffled list is the vertex function: position = rank
    random.Random(derive_seed(seed, mask)).shuffle(verts)
    acc: list[int] = [1]
    below = 0
    for x in verts:
        _add_into(acc, _ph(adj, adj[x] & below, seed, memo, shortcut), 1)
        below |= 1 << x
    result = tuple(acc)
    if memo is not None:
        memo.put(mask, result)
    return result


def _ph_chunk(adj, subs, seed, memo_cap, shortcut) -> list[int]:
    memo = _Memo(memo_cap) if memo_cap else None
    acc: list[int] = []
    for sub in subs:
        _add_into(acc, _ph(adj, sub, seed, memo, shortcut))
    return acc


def _split(items: list, parts: int) -> list[list]:
    return [items[i::parts] for i in range(parts) if items[i::parts]]


def f_function_ph(
    G: Graph,
    seed: int = 0,
    *,
    memo: bool = True,
    memo_cap: int = DEFAULT_MEMO_CAP,
    shortcut: bool = True,
    workers: int = 1,
) -> UniPoly:
    """f-function via the parametrized Poincare-Hopf recursion.

    ``memo`` caches subproblems by vertex set (at most ``memo_cap`` entries
    per top-level call); ``shortcut`` returns ``(1+t)^m`` for complete
    subgraphs without recursing.  With ``workers > 1`` the top-level vertex
    sum is spread over worker processes.  The result never depends on
    ``seed``, ``memo``, ``shortcut`` or ``workers``.
    """
    adj = G.masks()
    full = (1 << G.n) - 1
    cap = memo_cap if memo else 0
    if workers <= 1 or G.n < 2:
        return UniPoly(_ph(adj, full, seed, _Memo(cap) if memo else None, shortcut))
    verts = _bits(full)
    if shortcut and _complete_size(adj, verts, full):
        return binomial_poly(G.n)
    random.Random(derive_seed(seed, full)).shuffle(verts)
    subs = []
    below = 0
    for x in verts:
        subs.append(adj[x] & below)
        below |= 1 << x
    acc: list[int] = [1]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_ph_chunk, adj, chunk, seed, cap, shortcut) for chunk in _split(subs, workers)]
        for fut in futures:
            _add_into(acc, fut.result(), 1)
    return UniPoly(acc)


# -- Gauss-Bonnet recursion ----------------------------------------------


def _integrate_sum(acc: list[int]) -> tuple[int, ...]:
    """``1 + sum_x F_x`` given ``acc[k] = sum_x [t^k] f_{S(x)}``."""
    out = [1]
    for k, total in enumerate(acc):
        coeff = Fraction(total, k + 1)
        if coeff.denominator != 1:
            raise InconsistencyError(f"Gauss-Bonnet sum left a non-integer coefficient {coeff} at t^{k + 1}")
        out.append(coeff.numerator)
    return tuple(out)


def _gb(adj: Sequence[int], mask: int, memo: _Memo | None, shortcut: bool) -> tuple[int, ...]:
    if not mask:
        return (1,)
    if memo is not None:
        hit = memo.get(mask)
        if hit is not None:
            return hit
    verts = _bits(mask)
    if shortcut and _complete_size(adj, verts, mask):
        return binomial_poly(len(verts)).coeffs
    acc: list[int] = []
    for x in verts:
        _add_into(acc, _gb(adj, adj[x] & mask, memo, shortcut))
    result = _integrate_sum(acc)
    if memo is not None:
        memo.put(mask, result)
    return result


def _gb_chunk(adj, subs, memo_cap, shortcut) -> list[int]:
    memo = _Memo(memo_cap) if memo_cap else None
    acc: list[int] = []
    for sub in subs:
        _add_into(acc, _gb(adj, sub, memo, shortcut))
    return acc


def f_function_gb(
    G: Graph,
    *,
    memo: bool = True,
    memo_cap: int = DEFAULT_MEMO_CAP,
    shortcut: bool = True,
    workers: int = 1,
) -> UniPoly:
    """f-function via the Gauss-Bonnet recursion on unit spheres.

    Each level sums the antiderivatives of the sphere f-functions; the sum
    must have integer coefficients, otherwise :class:`InconsistencyError`
    is raised.  Without ``memo`` the recursion visits every ordered clique
    and gets slow quickly.
    """
    adj = G.masks()
    full = (1 << G.n) - 1
    cap = memo_cap if memo else 0
    if workers <= 1 or G.n < 2:
        return UniPoly(_gb(adj, full, _Memo(cap) if memo else None, shortcut))
    verts = _bits(full)
    if shortcut and _complete_size(adj, verts, full):
        return binomial_poly(G.n)
    subs = [adj[x] for x in verts]
    acc: list[int] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_gb_chunk, adj, chunk, cap, shortcut) for chunk in _split(subs, workers)]
        for fut in futures:
            _add_into(acc, fut.result())
    return UniPoly(_integrate_sum(acc))


# -- brute force oracle ----------------------------------------------------


def f_vector_bruteforce(G: Graph) -> FVector:
    """Clique counts by listing every clique of ``G``."""
    return FVector(clique_counts(G.masks(), (1 << G.n) - 1))


def f_function(G: Graph, algo: str = "ph", seed: int = 0, **kwargs) -> UniPoly:
    if algo == "ph":
        return f_function_ph(G, seed, **kwargs)
    if algo == "gb":
        return f_function_gb(G, **kwargs)
    if algo == "brute":
        return f_vector_to_poly(f_vector_bruteforce(G))
    raise ValueError(f"unknown algorithm {algo!r}; expected one of {ALGORITHMS}")


def f_vector(G: Graph, algo: str = "ph", seed: int = 0, **kwargs) -> FVector:
    return FVector(f_function(G, algo, seed, **kwargs).coeffs[1:])


def euler_characteristic(G: Graph, algo: str = "ph", seed: int = 0) -> int:
    """``chi(G) = 1 - f_G(-1)``."""
    return 1 - f_function(G, algo, seed)(-1)


# -- indices ----------------------------------------------------------------


def _require_locally_injective(G: Graph, g: Mapping) -> None:
    if not is_locally_injective(G, g):
        raise NotLocallyInjective("vertex function is not locally injective")


def index_poly(G: Graph, g: Mapping, v, seed: int = 0) -> UniPoly:
    """f-function of the sub-level sphere ``S_g(v)``."""
    _require_locally_injective(G, g)
    return f_function_ph(sub_level_sphere(G, g, v), seed)


def integer_index(G: Graph, g: Mapping, v, seed: int = 0) -> int:
    """``1 - chi(S_g(v))``, i.e. the index polynomial at ``t = -1``."""
    return index_poly(G, g, v, seed)(-1)


@dataclass(frozen=True)
class IndexReport:
    polys: dict = field(default_factory=dict)
    integers: dict = field(default_factory=dict)

    def poly_sum(self) -> UniPoly:
        return sum(self.polys.values(), UniPoly())

    def integer_sum(self) -> int:
        return sum(self.integers.values())


def index_report(G: Graph, g: Mapping, seed: int = 0) -> IndexReport:
    _require_locally_injective(G, g)
    polys = {v: f_function_ph(sub_level_sphere(G, g, v), seed) for v in G.vertices}
    return IndexReport(polys, {v: p(-1) for v, p in polys.items()})


# -- curvature --------------------------------------------------------------


def curvature(G: Graph, v) -> Fraction:
    """``K(v) = sum_k (-1)^k f_{k-1}(S(v)) / (k+1)`` with ``f_{-1} = 1``."""
    fs = f_function_ph(unit_sphere(G, v)).coeffs
    return sum((Fraction((-1) ** k * c, k + 1) for k, c in enumerate(fs)), Fraction(0))


def curvature_poly(G: Graph, v) -> RatPoly:
    """``K_v(t)`` defined by ``t K_v(t) = F_{S(v)}(t)``."""
    return antiderivative(f_function_ph(unit_sphere(G, v))).shift_down()


@dataclass(frozen=True)
class CurvatureReport:
    values: dict = field(default_factory=dict)
    polys: dict = field(default_factory=dict)

    def total(self) -> int:
        """Sum of curvatures; must be an integer."""
        s = sum(self.values.values(), Fraction(0))
        if s.denominator != 1:
            raise InconsistencyError(f"curvatures sum to non-integer {s}")
        return s.numerator


def curvature_report(G: Graph) -> CurvatureReport:
    values, polys = {}, {}
    for v in G.vertices:
        values[v] = curvature(G, v)
        polys[v] = curvature_poly(G, v)
    return CurvatureReport(values, polys)


def exact_index_expectation(G: Graph, v, max_vertices: int = MAX_PERMUTATION_VERTICES) -> RatPoly:
    """Average of ``index_poly(G, g, v)`` over all ``|V|!`` rank permutations."""
    n = G.n
    if n > max_vertices:
        raise PermutationLimitExceeded(f"{n} vertices exceeds the permutation limit of {max_vertices}")
    iv = G.index_of(v)
    nbrs = [G.index_of(u) for u in G.neighbors(v)]
    # the index depends only on which neighbors land below v
    tally: Counter = Counter()
    for ranks in itertools.permutations(range(n)):
        rv = ranks[iv]
        tally[frozenset(u for u in nbrs if ranks[u] < rv)] += 1
    adj = G.masks()
    total = RatPoly()
    for below, count in tally.items():
        mask = sum(1 << u for u in below)
        total = total + f_vector_to_poly(clique_counts(adj, mask)) * count
    return total * Fraction(1, sum(tally.values()))


def verify_ph_identity(G: Graph, g: Mapping, seed: int = 0) -> bool:
    """Check ``f_G = 1 + t sum_v i_{g,v}`` exactly against the clique listing."""
    report = index_report(G, g, seed)
    lhs = f_vector_to_poly(f_vector_bruteforce(G))
    rhs = UniPoly([1]) + UniPoly.monomial(1) * report.poly_sum()
    return lhs == rhs
