"""Predicates over {0,1,2} vertex labelings.

A labeling is any sequence of ints in {0,1,2}, one entry per vertex; tuples
are used throughout because they compare lexicographically, which is the
tie-break order of the solvers.  Level sets are returned as bitmasks and are
recomputed on demand: these predicates run inside enumeration loops, so they
stay allocation-free instead of caching.

Naming of the predicates follows the domination-variant zoo:

* Italian (ID): every 0-vertex sees total label at least 2 in its
  neighborhood.
* covering Italian (CID): Italian and the positive vertices form a vertex
  cover (equivalently the 0-set is independent).
* outer-independent Roman (OIRD): every 0-vertex has a 2-neighbor and the
  0-set is independent.
* 2-outer-independent dominating set (2OID): set variant; every vertex
  outside the set has two neighbors inside, and the outside is independent.

A 0 on an isolated vertex fails the Italian condition (empty sum), so the
one-vertex graph has covering Italian number 1 under this convention.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, VertexSet

Labeling = tuple[int, ...]


def weight(f: Sequence[int]) -> int:
    """Total weight of a labeling."""
    return sum(f)


def level_sets(f: Sequence[int]) -> tuple[VertexSet, VertexSet, VertexSet]:
    """Bitmasks of the vertices labeled 0, 1 and 2 (a partition)."""
    v0 = v1 = v2 = 0
    for v, label in enumerate(f):
        if label == 0:
            v0 |= 1 << v
        elif label == 1:
            v1 |= 1 << v
        elif label == 2:
            v2 |= 1 << v
        else:
            raise ValueError(f"label {label} at vertex {v} not in {{0,1,2}}")
    return v0, v1, v2


def _check_dims(g: Graph, f: Sequence[int]) -> None:
    if len(f) != g.n:
        raise ValueError(f"labeling length {len(f)} != graph order {g.n}")


def is_id_function(g: Graph, f: Sequence[int]) -> bool:
    """Every 0-vertex has neighbor labels summing to at least 2."""
    _check_dims(g, f)
    v0, v1, v2 = level_sets(f)
    adj = g.adj
    m = v0
    while m:
        b = m & -m
        m ^= b
        a = adj[b.bit_length() - 1]
        if (a & v1).bit_count() + 2 * (a & v2).bit_count() < 2:
            return False
    return True


def is_cid_function(g: Graph, f: Sequence[int]) -> bool:
    """Italian condition plus independence of the 0-set (covering variant)."""
    _check_dims(g, f)
    v0, v1, v2 = level_sets(f)
    adj = g.adj
    m = v0
    while m:
        b = m & -m
        m ^= b
        a = adj[b.bit_length() - 1]
        if a & v0:
            return False
        if (a & v1).bit_count() + 2 * (a & v2).bit_count() < 2:
            return False
    return True


def is_oird_function(g: Graph, f: Sequence[int]) -> bool:
    """Every 0-vertex has a 2-labeled neighbor and the 0-set is independent."""
    _check_dims(g, f)
    v0, _v1, v2 = level_sets(f)
    adj = g.adj
    m = v0
    while m:
        b = m & -m
        m ^= b
        a = adj[b.bit_length() - 1]
        if a & v0 or not a & v2:
            return False
    return True


def is_roman_function(g: Graph, f: Sequence[int]) -> bool:
    """Every 0-vertex has a 2-labeled neighbor."""
    _check_dims(g, f)
    v0, _v1, v2 = level_sets(f)
    adj = g.adj
    m = v0
    while m:
        b = m & -m
        m ^= b
        if not adj[b.bit_length() - 1] & v2:
            return False
    return True


def is_two_oid_set(g: Graph, s: VertexSet) -> bool:
    """Outside of ``s`` is independent and doubly dominated by ``s``."""
    outside = g.full_mask & ~s
    adj = g.adj
    m = outside
    while m:
        b = m & -m
        m ^= b
        a = adj[b.bit_length() - 1]
        if a & outside:
            return False
        if (a & s).bit_count() < 2:
            return False
    return True


def indicator_labeling(g: Graph, s: VertexSet, value: int = 1) -> Labeling:
    """Labeling assigning ``value`` on ``s`` and 0 elsewhere."""
    return tuple(value if s >> v & 1 else 0 for v in range(g.n))
