"""Gadget reductions: ONE-IN-THREE 3SAT to Single-Neighbor, and pattern shifts."""

from .roles import ROLE_KINDS, ReductionMap, Role
from .sat import (
    MODES,
    Assignment,
    CnfFormula,
    Literal,
    build_sat_reduction,
    clause_gadget_edges,
    decode_profile,
    encode_assignment,
    graph_for_map,
    one_in_three_satisfies,
    reduction_instance,
    sat_brute_force,
)
from .shifts import (
    FAMILY_KINDS,
    build_family,
    build_flat_replication,
    build_sharp_family,
    build_sharp_member,
    build_shift2_gadget_graph,
    build_sloped_family,
    build_sloped_member,
    family_base,
    flat_parameters,
    sharp_parameters,
    shift2_base,
    sloped_parameters,
    turing_decide_via_family,
)
