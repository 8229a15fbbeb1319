"""Exhaustive labeled-graph corpora for desk-scale theorem sweeps.

Graphs on n vertices are indexed by the integer whose bit k records the
k-th vertex pair in lexicographic order (0,1), (0,2), ..., (0,n-1), (1,2),
...; enumeration is by ascending index, so corpora are deterministic and
shardable by index range.  The enumeration is intentionally labeled, not
isomorphism-reduced: the theorem checks are isomorphism-invariant, so the
redundancy costs only time at these sizes.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, is_connected

#: Beyond 7 vertices the labeled corpus (2^21 graphs at n=7) stops being
#: desk-scale.
MAX_CORPUS_N = 7


@lru_cache(maxsize=None)
def pair_order(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def corpus_size(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def graph_from_index(n: int, index: int) -> Graph:
    adj = [0] * n
    for u, v in pair_order(n):
        if index & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        index >>= 1
    return Graph(n, tuple(adj))


def graph_index(g: Graph) -> int:
    index = 0
    for k, (u, v) in enumerate(pair_order(g.n)):
        if g.adj[u] >> v & 1:
            index |= 1 << k
    return index


def exhaustive_graphs(
    n: int, connected_only: bool = False, start: int = 0, stop: int | None = None
) -> Iterator[Graph]:
    """All labeled graphs on n vertices with index in [start, stop)."""
    if not 0 <= n <= MAX_CORPUS_N:
        raise ValueError(f"corpus order must be 0..{MAX_CORPUS_N}")
    hi = corpus_size(n) if stop is None else min(stop, corpus_size(n))
    for index in range(start, hi):
        g = graph_from_index(n, index)
        if connected_only and not is_connected(g):
            continue
        yield g
