"""Covering Italian domination: exact solvers, families, recognizers, harness."""

from .graph import (
    Graph,
    VertexSet,
    build_graph,
    components,
    corona_k1,
    degree_summary,
    is_connected,
    is_independent,
    is_k1r_free,
    is_triangle_free,
    is_vertex_cover,
    leaf_and_support_census,
)
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .labeling import (
    Labeling,
    is_cid_function,
    is_id_function,
    is_oird_function,
    is_roman_function,
    is_two_oid_set,
    level_sets,
    weight,
)
from .solvers import (
    BoundReport,
    CapExceeded,
    SolveResult,
    cid_bounds,
    cid_number_bruteforce,
    cid_number_exact,
    cid_two_approx,
    corona_identity_check,
    independence_number,
    italian_number_exact,
    oird_number_exact,
    roman_number_exact,
    two_oid_number_exact,
    vertex_cover_number,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
