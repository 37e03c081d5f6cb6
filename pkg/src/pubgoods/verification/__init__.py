"""Generators, brute-force oracles and exhaustive claim checks."""

from .explore import conjecture_search
from .generators import (
    FIXED_CNFS,
    all_graphs,
    cnf_corpus,
    connected_graphs,
    nonisomorphic_graphs,
    random_cnf,
    random_graph,
)
from .lemmas import (
    SUITES,
    Composition,
    HostSample,
    LemmaReport,
    check_appendix_gadgets,
    check_degree_bound,
    check_family_equivalence,
    check_flat_replication,
    check_gadget_lemmas,
    check_reduction_equivalence,
    check_shift2_equivalence,
    check_shift_equivalences,
    check_structure_laws,
    compose,
    format_reports,
    gadget_compositions,
    run_suite,
)
from .oracles import brute_force_exists, brute_force_pne
