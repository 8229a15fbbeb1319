"""Immutable simple-graph core on per-vertex bitsets.

Vertices are dense integers ``0..n-1``.  Adjacency is stored as one Python
int per vertex, bit ``u`` of ``adj[v]`` meaning ``uv`` is an edge.  Vertex
sets everywhere in this package are plain int bitmasks over the same index
space, which keeps the inner loops of the solvers allocation-free.

Graphs are immutable after construction and safe to share between workers.
``Graph(...)`` itself does not validate; use :func:`build_graph` for checked
construction from an edge list.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

#: Hard cap on the order of a graph.  Corpora in this project are small and
#: a fixed bound keeps bitmask arithmetic predictable.
MAX_VERTICES = 128

VertexSet = int  # bitmask over 0..n-1


def mask_of(vertices: Iterable[int]) -> VertexSet:
    """Bitmask with the given vertex indices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def set_of(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True, slots=True)
class DegreeSummary:
    """Minimum and maximum degree of a nonempty graph."""

    delta: int
    max_degree: int


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the open neighborhood of ``v``."""

    n: int
    adj: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    yield (u, v)
                rest >>= 1
                v += 1

    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.adj[v])

    def validate(self) -> None:
        """Raise ``ValueError`` if any representation invariant is broken."""
        if self.n < 0 or self.n > MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = self.full_mask
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency of {v} has bits beyond n-1")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not (self.adj[u] >> v & 1):
                    raise ValueError(f"asymmetric edge ({v},{u})")


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Checked constructor: deduplicates edges, rejects loops and bad indices."""
    if n < 0 or n > MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def degree_summary(g: Graph) -> DegreeSummary:
    if g.n == 0:
        raise ValueError("degree summary undefined for the empty graph")
    degs = [a.bit_count() for a in g.adj]
    return DegreeSummary(min(degs), max(degs))


def is_independent(g: Graph, s: VertexSet) -> bool:
    """No edge of ``g`` has both endpoints in ``s``."""
    m = s
    while m:
        b = m & -m
        m ^= b
        if g.adj[b.bit_length() - 1] & s:
            return False
    return True


def is_vertex_cover(g: Graph, q: VertexSet) -> bool:
    """Every edge of ``g`` has at least one endpoint in ``q``."""
    return is_independent(g, g.full_mask & ~q)


def components(g: Graph) -> list[VertexSet]:
    """Connected components as bitmasks, ordered by smallest member."""
    seen = 0
    out: list[int] = []
    full = g.full_mask
    adj = g.adj
    while seen != full:
        start = (~seen & full) & -(~seen & full)
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        seen |= comp
    return out


def is_connected(g: Graph) -> bool:
    """True when the graph has at most one component (vacuously for n=0)."""
    return g.n == 0 or len(components(g)) == 1


def induced_subgraph(g: Graph, mask: VertexSet) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``mask`` plus the list mapping new index -> old."""
    verts = list(iter_bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(verts), tuple(adj)), verts


def corona_k1(g: Graph) -> Graph:
    """Attach one pendant vertex to every vertex.

    The output has ``2n`` vertices: ``0..n-1`` keep the original edges and
    the new vertex ``n+i`` is adjacent exactly to ``i``.
    """
    n = g.n
    if 2 * n > MAX_VERTICES:
        raise ValueError("corona would exceed the vertex cap")
    adj = [g.adj[v] | 1 << (n + v) for v in range(n)]
    adj += [1 << v for v in range(n)]
    return Graph(2 * n, tuple(adj))


def _has_independent_subset(g: Graph, inside: int, size: int) -> bool:
    """True when ``inside`` contains an independent set of ``size`` vertices."""
    if size == 0:
        return True
    if inside.bit_count() < size:
        return False
    adj = g.adj

    def rec(avail: int, need: int) -> bool:
        if need == 0:
            return True
        while avail:
            if avail.bit_count() < need:
                return False
            b = avail & -avail
            avail ^= b
            if rec(avail & ~adj[b.bit_length() - 1], need - 1):
                return True
        return False

    return rec(inside, size)


def is_k1r_free(g: Graph, r: int) -> bool:
    """No vertex has an independent set of ``r`` vertices in its neighborhood.

    ``r=3`` is claw-freeness.  Exponential only in the degree of a vertex.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    for v in range(g.n):
        if g.degree(v) >= r and _has_independent_subset(g, g.adj[v], r):
            return False
    return True


def is_triangle_free(g: Graph) -> bool:
    for u, v in g.edges():
        if g.adj[u] & g.adj[v]:
            return False
    return True


def leaf_and_support_census(g: Graph) -> tuple[VertexSet, VertexSet, VertexSet]:
    """Masks of (degree-1 vertices, their neighbors, neighbors of >=2 leaves)."""
    leaves = 0
    for v in range(g.n):
        if g.adj[v].bit_count() == 1:
            leaves |= 1 << v
    supports = 0
    strong = 0
    for v in range(g.n):
        k = (g.adj[v] & leaves).bit_count()
        if k >= 1:
            supports |= 1 << v
        if k >= 2:
            strong |= 1 << v
    return leaves, supports, strong
