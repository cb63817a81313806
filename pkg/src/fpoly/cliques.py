"""Explicit clique enumeration over bit-mask adjacency.

This is deliberately the slow, obvious method: every clique is produced once
by extending it with common neighbors of higher index.  It backs the
brute-force oracles and nothing else.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence


def iter_cliques(adj: Sequence[int], mask: int) -> Iterator[int]:
    """Yield every nonempty clique inside ``mask`` as a bit mask."""
    stack = []
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        # candidates: neighbors of v inside mask with a higher index
        stack.append((low, adj[v] & mask & ~((low << 1) - 1)))
    while stack:
        clique, cand = stack.pop()
        yield clique
        while cand:
            low = cand & -cand
            cand ^= low
            stack.append((clique | low, cand & adj[low.bit_length() - 1]))


def clique_counts(adj: Sequence[int], mask: int) -> list[int]:
    """``counts[k]`` = number of cliques with ``k + 1`` vertices."""
    counts: list[int] = []
    for c in iter_cliques(adj, mask):
        k = c.bit_count() - 1
        while len(counts) <= k:
            counts.append(0)
        counts[k] += 1
    return counts
