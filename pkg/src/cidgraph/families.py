"""Constructors for the named graph families and extremal constructions.

Everything here returns a validated :class:`~cidgraph.graph.Graph` with a
fixed, documented vertex layout so tests can reference exact indices.
Constructors raise ``ValueError`` naming the violated clause when parameters
break a family's defining constraints.

Families with structural side conditions (the double-cover family, the
clique-minus bases, the small-value triple families, the deficit-two
variants) are cross-checked elsewhere against the brute-force solver; the
builders only enforce what can be read off the parameters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graph import (
    Graph,
    build_graph,
    corona_k1,
    is_connected,
    is_independent,
    mask_of,
)
from .solvers import CapExceeded

# ---------------------------------------------------------------------------
# elementary families
# ---------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return build_graph(n, list(combinations(range(n), 2)))


def star(n: int) -> Graph:
    """Star with ``n`` leaves: center 0, leaves 1..n."""
    if n < 1:
        raise ValueError("star needs at least one leaf")
    return build_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite_2n(n: int) -> Graph:
    """Complete bipartite graph with parts {0,1} and {2..n+1}."""
    if n < 1:
        raise ValueError("need at least one vertex in the large part")
    return build_graph(n + 2, [(a, b) for a in (0, 1) for b in range(2, n + 2)])


def k2n_star(n: int) -> Graph:
    """complete_bipartite_2n plus the edge inside the 2-vertex part."""
    if n < 1:
        raise ValueError("need at least one vertex in the large part")
    edges = [(a, b) for a in (0, 1) for b in range(2, n + 2)]
    edges.append((0, 1))
    return build_graph(n + 2, edges)


# ---------------------------------------------------------------------------
# suns and triangle chains (half-order family ingredients)
# ---------------------------------------------------------------------------


def k_sun(k: int) -> Graph:
    """Cycle 0..k-1 with outer vertex k+i adjacent to i and i+1 (mod k)."""
    if k < 3:
        raise ValueError("sun needs a cycle of length at least three")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, i) for i in range(k)]
    edges += [(k + i, (i + 1) % k) for i in range(k)]
    return build_graph(2 * k, edges)


def triangle_chain(k: int) -> Graph:
    """Path 0..k-1 with apex k+j on each path edge (j, j+1); k-1 triangles."""
    if k < 2:
        raise ValueError("triangle chain needs a path of at least two vertices")
    edges = [(j, j + 1) for j in range(k - 1)]
    for j in range(k - 1):
        edges += [(k + j, j), (k + j, j + 1)]
    return build_graph(2 * k - 1, edges)


def closed_triangle_chain(ks: list[int] | tuple[int, ...]) -> Graph:
    """Triangle chains arranged in a ring, one connector between blocks.

    ``ks`` lists block sizes left to right; zero entries are padding and
    contribute nothing.  Block i lays out its path vertices, then its
    apexes, then the connector joining it to the next nonzero block
    (cyclically), so ``[1]*r`` is exactly ``cycle_graph(2r)`` and ``[2]`` is
    the complete graph on four vertices minus the edge (2,3).
    """
    blocks = [k for k in ks if k != 0]
    if any(k < 0 for k in ks):
        raise ValueError("block sizes must be non-negative")
    if not blocks:
        raise ValueError("need at least one nonzero block")
    if sum(blocks) < 2:
        raise ValueError("total block size must be at least two")
    edges: list[tuple[int, int]] = []
    firsts: list[int] = []
    lasts: list[int] = []
    connectors: list[int] = []
    idx = 0
    for k in blocks:
        first = idx
        for j in range(k - 1):
            edges.append((first + j, first + j + 1))
        idx += k
        for j in range(k - 1):
            edges += [(idx + j, first + j), (idx + j, first + j + 1)]
        idx += k - 1
        firsts.append(first)
        lasts.append(first + k - 1)
        connectors.append(idx)
        idx += 1
    m = len(blocks)
    for i in range(m):
        edges.append((connectors[i], lasts[i]))
        edges.append((connectors[i], firsts[(i + 1) % m]))
    return build_graph(idx, edges)


# ---------------------------------------------------------------------------
# double-cover family (CID number equal to twice the cover number)
# ---------------------------------------------------------------------------

HALL_SUBSET_CAP = 1 << 20


def _hall_condition_holds(
    h: Graph, one_leaf: list[int], connector_sets: list[set[int]], cap: int = HALL_SUBSET_CAP
) -> bool:
    """Every independent set K of one-leaf base vertices must see >= |K|
    distinct connectors."""
    if 2 ** len(one_leaf) > cap:
        raise CapExceeded("too many one-leaf vertices for the exhaustive check")
    for size in range(1, len(one_leaf) + 1):
        for sel in combinations(one_leaf, size):
            if not is_independent(h, mask_of(sel)):
                continue
            seen: set[int] = set()
            for i, touched in enumerate(connector_sets):
                if touched & set(sel):
                    seen.add(i)
            if len(seen) < size:
                return False
    return True


def double_cover_instance(
    h: Graph,
    leaf_counts: list[int] | tuple[int, ...],
    connector_neighbors: list[tuple[int, ...] | list[int]] = (),
) -> Graph:
    """Assemble a member of the family characterizing cid = 2 * cover number.

    Every base vertex gets ``leaf_counts[v]`` private pendant leaves plus the
    listed connectors (independent outside vertices adjacent to at least two
    base vertices).  Enforced clauses: at least one leaf per base vertex,
    outside degree at least two per base vertex, the matching condition for
    independent sets of one-leaf base vertices, and connectivity of the
    result.  Layout: base 0..b-1, then leaves grouped by base vertex, then
    connectors.
    """
    b = h.n
    if b < 1:
        raise ValueError("base graph must be nonempty")
    if len(leaf_counts) != b:
        raise ValueError("leaf_counts must list one count per base vertex")
    if any(c < 1 for c in leaf_counts):
        raise ValueError("clause violated: every base vertex needs a leaf")
    conn_sets = [set(c) for c in connector_neighbors]
    for i, cs in enumerate(conn_sets):
        if any(not 0 <= v < b for v in cs):
            raise ValueError(f"connector {i} references a vertex outside the base")
        if len(cs) < 2:
            raise ValueError(
                f"connector {i} needs at least two base neighbors (it would be a leaf)"
            )
    for v in range(b):
        outside = leaf_counts[v] + sum(1 for cs in conn_sets if v in cs)
        if outside < 2:
            raise ValueError(f"clause violated: base vertex {v} has outside degree < 2")
    one_leaf = [v for v in range(b) if leaf_counts[v] == 1]
    if not _hall_condition_holds(h, one_leaf, conn_sets):
        raise ValueError("clause violated: matching condition on one-leaf vertices")

    edges = list(h.edges())
    idx = b
    for v in range(b):
        for _ in range(leaf_counts[v]):
            edges.append((v, idx))
            idx += 1
    for cs in conn_sets:
        for v in sorted(cs):
            edges.append((v, idx))
        idx += 1
    g = build_graph(idx, edges)
    if not is_connected(g):
        raise ValueError("assembled graph is disconnected")
    return g


def random_double_cover(base_size: int, seed: int, attempts: int = 2000) -> Graph:
    """Seeded random member of the double-cover family."""
    if base_size < 1:
        raise ValueError("base size must be positive")
    rng = random.Random(seed)
    for _ in range(attempts):
        h = _random_graph(rng, base_size, 0.5)
        leaf_counts = [rng.choice((1, 1, 2)) for _ in range(base_size)]
        connectors: list[tuple[int, ...]] = []
        ones = [v for v in range(base_size) if leaf_counts[v] == 1]
        for v in ones:
            others = [u for u in range(base_size) if u != v]
            if not others:
                break
            connectors.append((v, rng.choice(others)))
        try:
            return double_cover_instance(h, leaf_counts, connectors)
        except ValueError:
            continue
    raise ValueError("could not sample a valid double-cover instance")


# ---------------------------------------------------------------------------
# dense bases: complete graphs minus a few edges, with pendant leaves
# ---------------------------------------------------------------------------


def clique_minus(r: int, removed: list[tuple[int, int]]) -> Graph:
    """Complete graph on r vertices minus the given edges.

    Valid only when the result keeps minimum degree >= 2 and independence
    number exactly 2 (equivalently the removed edges are nonempty, span no
    triangle among themselves, and no vertex loses too many edges).
    """
    if r < 1:
        raise ValueError("clique size must be positive")
    if not removed:
        raise ValueError("at least one removed edge required (use complete_graph)")
    rm = set()
    for u, v in removed:
        if not (0 <= u < r and 0 <= v < r) or u == v:
            raise ValueError(f"removed edge ({u},{v}) invalid for clique size {r}")
        rm.add((min(u, v), max(u, v)))
    edges = [e for e in combinations(range(r), 2) if e not in rm]
    g = build_graph(r, edges)
    if min(g.degree(v) for v in range(r)) < 2:
        raise ValueError("clause violated: minimum degree fell below 2")
    # independence number exactly 2 <=> removed-edge graph is triangle-free
    rm_adj = [0] * r
    for u, v in rm:
        rm_adj[u] |= 1 << v
        rm_adj[v] |= 1 << u
    for u, v in rm:
        if rm_adj[u] & rm_adj[v]:
            raise ValueError("clause violated: independence number exceeds 2")
    return g


def clique_minus_with_leaves(
    r: int, removed: list[tuple[int, int]], attach: list[int]
) -> Graph:
    """Clique-minus base plus one pendant leaf per ``attach`` entry.

    Leaf multiplicity obeys the base: with two or more removed edges the
    attachment vertices must be distinct; with exactly one removed edge a
    single vertex may appear twice; a plain complete base requires exactly
    one vertex doubled (or a single leaf).  Layout: base 0..r-1, leaves
    r..r+k-1 in attach order.
    """
    m = len(removed)
    if m == 0:
        base = complete_graph(r)
    else:
        base = clique_minus(r, removed)
    if any(not 0 <= v < r for v in attach):
        raise ValueError("attachment vertex out of range")
    counts: dict[int, int] = {}
    for v in attach:
        counts[v] = counts.get(v, 0) + 1
    doubled = [v for v, c in counts.items() if c == 2]
    if any(c > 2 for c in counts.values()):
        raise ValueError("clause violated: no vertex may carry three leaves")
    if m >= 2 and doubled:
        raise ValueError("clause violated: attachments must be distinct")
    if m == 1 and len(doubled) > 1:
        raise ValueError("clause violated: at most one vertex may carry two leaves")
    if m == 0:
        if len(attach) == 0:
            raise ValueError("complete base requires at least one leaf")
        if len(attach) >= 2 and len(doubled) != 1:
            raise ValueError("clause violated: exactly one vertex carries two leaves")
    edges = list(base.edges())
    for i, v in enumerate(attach):
        edges.append((v, r + i))
    return build_graph(r + len(attach), edges)


def p4_with_leaves(k: int, attach: list[int] | None = None) -> Graph:
    """Path 0-1-2-3 plus k pendant leaves on k distinct path vertices."""
    if not 1 <= k <= 4:
        raise ValueError("k must be between 1 and 4")
    if attach is None:
        attach = list(range(k))
    if len(attach) != k or len(set(attach)) != k or any(not 0 <= v <= 3 for v in attach):
        raise ValueError("attach must list k distinct path vertices")
    edges = [(0, 1), (1, 2), (2, 3)]
    for i, v in enumerate(attach):
        edges.append((v, 4 + i))
    return build_graph(4 + k, edges)


def clique_with_leaves(m: int, t: int) -> Graph:
    """Complete graph on m vertices plus one pendant leaf on each of 0..t-1."""
    if m < 3:
        raise ValueError("clique size must be at least 3")
    if not 0 <= t <= m:
        raise ValueError("leaf count must be between 0 and the clique size")
    edges = list(combinations(range(m), 2))
    for i in range(t):
        edges.append((i, m + i))
    return build_graph(m + t, edges)


# ---------------------------------------------------------------------------
# triple families: connected graphs with CID number exactly three
# ---------------------------------------------------------------------------

# Attached-set sizes are given in the fixed key order below; vertices are
# appended grouped per type.  x=0, y=1 (and z=2 for the triple-seed
# families).
_R_TYPE_ORDER = ("x", "xy", "yz", "xz", "xyz")

_R_SEEDS: dict[int, tuple[int, list[tuple[int, int]]]] = {
    1: (2, []),
    2: (2, [(0, 1)]),
    3: (3, []),
    4: (3, [(0, 1)]),
    5: (3, [(0, 1), (1, 2)]),
    6: (3, [(0, 1), (0, 2)]),
    7: (3, [(0, 1), (1, 2), (0, 2)]),
}

_R_MINIMAL: dict[tuple[int, str], dict[str, int]] = {
    (1, "a"): {"x": 1, "xy": 1},
    (2, "a"): {"x": 1, "xy": 1},
    (3, "a"): {"xy": 1, "yz": 1},
    (3, "b"): {"xy": 1, "xyz": 1},
    (3, "c"): {"xyz": 3},
    (4, "a"): {"yz": 1},
    (4, "b"): {"xyz": 1},
    (5, "a"): {"xy": 1},
    (5, "b"): {"xyz": 2},
    (6, "a"): {"xy": 1},
    (6, "b"): {"yz": 1, "xyz": 1},
    (6, "c"): {"xyz": 2},
    (7, "a"): {"xy": 1, "yz": 1},
    (7, "b"): {"xyz": 1},
}

_NEIGHBORS_OF_TYPE = {
    "x": (0,),
    "xy": (0, 1),
    "yz": (1, 2),
    "xz": (0, 2),
    "xyz": (0, 1, 2),
}


def _r_clause_ok(which: int, clause: str, sizes: dict[str, int]) -> bool:
    xy = sizes.get("xy", 0)
    yz = sizes.get("yz", 0)
    xyz = sizes.get("xyz", 0)
    if which in (1, 2):
        return sizes.get("x", 0) >= 1 and xy >= 1
    if which == 3:
        if clause == "a":
            return xy >= 1 and yz >= 1
        if clause == "b":
            return (xy == 0) != (yz == 0) and xyz >= 1
        if clause == "c":
            return xy == 0 and yz == 0 and xyz >= 3
    if which == 4:
        if clause == "a":
            return yz >= 1
        if clause == "b":
            return yz == 0 and xyz >= 1
    if which == 5:
        if clause == "a":
            return xy + yz >= 1
        if clause == "b":
            return xy == 0 and yz == 0 and xyz >= 2
    if which == 6:
        if clause == "a":
            return xy >= 1
        if clause == "b":
            return xy == 0 and yz >= 1 and xyz >= 1
        if clause == "c":
            return xy == 0 and xyz >= 2
    if which == 7:
        if clause == "a":
            return xy >= 1 and yz >= 1
        if clause == "b":
            return (xy == 0 or yz == 0) and xyz >= 1
    return False


def r_family_sample(
    which: int,
    clause: str = "a",
    sizes: dict[str, int] | None = None,
    seed: int | None = None,
) -> Graph:
    """One member of triple family 1..7 under the requested clause.

    Without ``sizes`` the minimal witness for the clause is emitted
    (randomly enlarged when a ``seed`` is given).  Pendant sets attach in the
    fixed order x, xy, yz, xz, xyz after the seed vertices.
    """
    if which not in _R_SEEDS:
        raise ValueError("family index must be 1..7")
    key = (which, clause)
    if key not in _R_MINIMAL:
        raise ValueError(f"family {which} has no clause {clause!r}")
    if sizes is None:
        sizes = dict(_R_MINIMAL[key])
        if seed is not None:
            rng = random.Random(seed)
            for t in list(sizes):
                sizes[t] += rng.randrange(0, 3)
    allowed = ("x", "xy") if which in (1, 2) else ("xy", "yz", "xz", "xyz")
    for t, c in sizes.items():
        if t not in _R_TYPE_ORDER or c < 0:
            raise ValueError(f"bad attached-set size {t}={c}")
        if c > 0 and t not in allowed:
            raise ValueError(f"clause violated: type {t} not allowed in family {which}")
    if not _r_clause_ok(which, clause, sizes):
        raise ValueError(f"clause violated: sizes {sizes} fail clause {clause} of family {which}")
    seed_n, seed_edges = _R_SEEDS[which]
    edges = list(seed_edges)
    idx = seed_n
    for t in _R_TYPE_ORDER:
        for _ in range(sizes.get(t, 0)):
            for u in _NEIGHBORS_OF_TYPE[t]:
                edges.append((u, idx))
            idx += 1
    g = build_graph(idx, edges)
    if not is_connected(g):
        raise ValueError("clause violated: assembled graph is disconnected")
    return g


# ---------------------------------------------------------------------------
# deficit-two variants (CID number = order - 2)
# ---------------------------------------------------------------------------


def alpha2_variant(clause: int, n: int, extra: int = 1) -> Graph:
    """Member of the independence-number-2 deficit-two family.

    Clause 1: clique on n minus ``extra`` matching edges (n >= 5).
    Clause 2: clique on n-2, a degree-2 support, one leaf (n >= 5).
    Clause 3: clique on n-2, a support of degree ``extra`` >= 3 not adjacent
    to the whole clique, one leaf.
    """
    if clause == 1:
        if n < 5:
            raise ValueError("family requires order at least 5")
        m = extra
        if m < 1 or 2 * m > n:
            raise ValueError("matching size out of range")
        return clique_minus(n, [(2 * i, 2 * i + 1) for i in range(m)])
    if clause == 2:
        if n < 5:
            raise ValueError("family requires order at least 5")
        edges = list(combinations(range(n - 2), 2))
        edges += [(0, n - 2), (n - 2, n - 1)]
        return build_graph(n, edges)
    if clause == 3:
        d = extra
        if n < 6 or not 3 <= d <= n - 2:
            raise ValueError("support degree must be 3..n-2 with order at least 6")
        edges = list(combinations(range(n - 2), 2))
        edges += [(i, n - 2) for i in range(d - 1)]
        edges.append((n - 2, n - 1))
        return build_graph(n, edges)
    raise ValueError("clause must be 1, 2 or 3")


def leafy_variant(clause: int, r: int, m: int = 1, doubled: int = 1) -> Graph:
    """Member of the leafy deficit-two family (independence number >= 3).

    ``clause`` uses two-digit codes 21, 22, 23, 24, 31, 32, 33, 34, 35
    mirroring the clause numbering of the recognizer.  ``r`` is the size of
    the dense base and ``m`` the removed-edge (or, for 31, leaf-count)
    parameter.  ``doubled`` picks the variant of clauses 22/23 where one
    designated support carries two leaves.  Layout: base on 0..r-1, pendant
    leaves after it, grouped by support in index order.
    """

    def attach(base: Graph, per_vertex: list[int]) -> Graph:
        es = list(base.edges())
        idx = r
        for v, cnt in enumerate(per_vertex):
            for _ in range(cnt):
                es.append((v, idx))
                idx += 1
        return build_graph(idx, es)

    if clause == 21:
        if r < 2:
            raise ValueError("base must have at least two vertices")
        return attach(complete_graph(r), [2] + [1] * (r - 1))
    if clause == 22:
        base = clique_minus(r, [(0, 1)])
        if doubled:
            return attach(base, [2] + [1] * (r - 1))
        return attach(base, [1] * r)
    if clause == 23:
        if m < 2:
            raise ValueError("star removal needs at least two removed edges")
        base = clique_minus(r, [(0, i) for i in range(1, m + 1)])
        if doubled:
            return attach(base, [2] + [1] * (r - 1))
        return attach(base, [1] * r)
    if clause == 24:
        if m < 2 or 2 * m > r:
            raise ValueError("need at least two disjoint removed edges")
        base = clique_minus(r, [(2 * i, 2 * i + 1) for i in range(m)])
        return attach(base, [1] * r)
    if clause == 31:
        k = m  # number of leaves; one doubled support, k-2 single, >=1 bare
        if k < 2 or k > r:
            raise ValueError("need 2 <= leaves <= base size")
        return attach(complete_graph(r), [2] + [1] * (k - 2) + [0] * (r - k + 1))
    if clause == 32:
        if m < 1:
            raise ValueError("need at least one removed edge at the hub")
        base = clique_minus(r, [(0, i) for i in range(1, m + 1)])
        return attach(base, [2, 0] + [1] * (r - 2))
    if clause == 33:
        if m < 1 or 2 * m > r:
            raise ValueError("matching removal out of range")
        base = clique_minus(r, [(2 * i, 2 * i + 1) for i in range(m)])
        return attach(base, [1, 0] + [1] * (r - 2))
    if clause == 34:
        if m < 1:
            raise ValueError("need at least one removed edge at the first bare vertex")
        base = clique_minus(r, [(0, i) for i in range(1, m + 1)])
        return attach(base, [0, 0] + [1] * (r - 2))
    if clause == 35:
        if m < 2 or 2 * m > r:
            raise ValueError("need a removed edge disjoint from the two bare vertices")
        base = clique_minus(r, [(2 * i, 2 * i + 1) for i in range(m)])
        return attach(base, [0, 0] + [1] * (r - 2))
    raise ValueError("clause must be one of 21,22,23,24,31,32,33,34,35")


# ---------------------------------------------------------------------------
# random graphs
# ---------------------------------------------------------------------------


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def random_connected(n: int, edge_prob: float, seed: int, budget: int = 10000) -> Graph:
    """G(n,p) conditioned on connectivity by rejection; deterministic per seed."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError("edge probability must lie in [0,1]")
    rng = random.Random(seed)
    for _ in range(budget):
        g = _random_graph(rng, n, edge_prob)
        if is_connected(g):
            return g
    raise ValueError("rejection budget exhausted; edge probability too small")


# ---------------------------------------------------------------------------
# CLI-facing family registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Family request: kind, integer parameters, and sampling knobs."""

    kind: str
    params: tuple[int, ...] = ()
    seed: int | None = None
    edge_prob: float = 0.5


def _bump_first(params: tuple[int, ...], i: int) -> tuple[int, ...]:
    if not params:
        raise ValueError("family needs at least one size parameter")
    return (params[0] + i,) + params[1:]


def build_family(spec: FamilySpec, count: int = 1) -> list[Graph]:
    """Materialize ``count`` graphs for a family spec.

    Sized families emit consecutive sizes starting at the given parameters;
    seeded families draw successive samples from one generator stream.
    """
    kind = spec.kind
    if kind.startswith("corona:"):
        inner = FamilySpec(kind[len("corona:"):], spec.params, spec.seed, spec.edge_prob)
        return [corona_k1(g) for g in build_family(inner, count)]

    out: list[Graph] = []
    if kind == "random-connected":
        (n,) = spec.params
        seed = 0 if spec.seed is None else spec.seed
        rng = random.Random(seed)
        for _ in range(count):
            sub = rng.randrange(1 << 30)
            out.append(random_connected(n, spec.edge_prob, sub))
        return out
    if kind == "double-cover":
        (b,) = spec.params
        seed = 0 if spec.seed is None else spec.seed
        for i in range(count):
            out.append(random_double_cover(b, seed + i))
        return out

    simple = {
        "star": star,
        "k2n": complete_bipartite_2n,
        "k2n-star": k2n_star,
        "path": path_graph,
        "cycle": cycle_graph,
        "complete": complete_graph,
        "sun": k_sun,
        "triangle-chain": triangle_chain,
    }
    for i in range(count):
        if kind in simple:
            out.append(simple[kind](spec.params[0] + i))
        elif kind == "closed-chain":
            ks = _bump_first(spec.params, i)
            out.append(closed_triangle_chain(list(ks)))
        elif kind == "p4-leaves":
            out.append(p4_with_leaves(spec.params[0] + i))
        elif kind == "clique-leaves":
            m, t = spec.params
            out.append(clique_with_leaves(m + i, t))
        elif kind == "clique-minus":
            r = spec.params[0] + i
            pairs = spec.params[1:]
            removed = [(pairs[j], pairs[j + 1]) for j in range(0, len(pairs), 2)]
            out.append(clique_minus(r, removed))
        elif kind == "clique-minus-leaves":
            r = spec.params[0] + i
            m = spec.params[1]
            pairs = spec.params[2 : 2 + 2 * m]
            removed = [(pairs[j], pairs[j + 1]) for j in range(0, len(pairs), 2)]
            attach = list(spec.params[2 + 2 * m :])
            out.append(clique_minus_with_leaves(r, removed, attach))
        elif kind in ("r1", "r2", "r3", "r4", "r5", "r6", "r7"):
            which = int(kind[1])
            clause = "abc"[spec.params[0]] if spec.params else "a"
            sizes = None
            if len(spec.params) > 1:
                sizes = dict(zip(_R_TYPE_ORDER, spec.params[1:]))
                sizes = {t: c + (i if t == next(iter(sizes)) else 0) for t, c in sizes.items()}
            out.append(r_family_sample(which, clause, sizes, spec.seed))
        elif kind == "alpha2":
            clause, n = spec.params[0], spec.params[1] + i
            extra = spec.params[2] if len(spec.params) > 2 else 1
            out.append(alpha2_variant(clause, n, extra))
        elif kind == "leafy":
            clause, r = spec.params[0], spec.params[1] + i
            m = spec.params[2] if len(spec.params) > 2 else 1
            out.append(leafy_variant(clause, r, m))
        else:
            raise ValueError(f"unknown family kind {kind!r}")
    return out


FAMILY_KINDS = (
    "star",
    "k2n",
    "k2n-star",
    "path",
    "cycle",
    "complete",
    "sun",
    "triangle-chain",
    "closed-chain",
    "p4-leaves",
    "clique-leaves",
    "clique-minus",
    "clique-minus-leaves",
    "r1",
    "r2",
    "r3",
    "r4",
    "r5",
    "r6",
    "r7",
    "alpha2",
    "leafy",
    "double-cover",
    "random-connected",
)
