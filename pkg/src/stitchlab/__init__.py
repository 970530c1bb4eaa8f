"""Exact computations on edge-critical triangle-free graphs.

Constructors for chains, bicycles, loop-chains and W13, the linear
invariants ``t`` and ``q``, destabilizer catalogs, classification into the
extremal classes, and exhaustive isomorph-free search.
"""

__version__ = "0.1.0"

from .alpha import AlphaResult, alpha, alpha_at_most, count_maximum_independent_sets, independence_number
from .canon import are_isomorphic, canonical_form, find_isomorphism
from .classify import ClassificationReport, ComponentVerdict, classify_graph, corollary4_bound, recognize_component
from .families import (
    Attachment,
    StitchBase,
    StitchResult,
    bicycle,
    chain,
    complete_bipartite,
    cycle,
    loop_chain,
    path,
    star,
    stitch2,
    stitch2_at_vertex,
    w13,
)
from .graph import Graph, from_edge_list, graph6_decode, graph6_encode
from .search import (
    ENumberResult,
    GenConstraints,
    e_number,
    generate_triangle_free,
    partition_workload,
    prop1_formula,
    verify_t_nonnegative,
    verify_theorem3,
)
from .stability import (
    LinearInvariant,
    is_destabilizer,
    is_edge_critical,
    is_s_stable,
    is_strongly_s_stable,
    minimal_destabilizers,
    q_value,
    redundant_edges,
    t_value,
)
