from __future__ import annotations

import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pubgoods.core import SINGLE_NEIGHBOR, Graph, InputError, PggInstance, is_ntpne
from pubgoods.reductions import (
    MODES,
    CnfFormula,
    build_sat_reduction,
    decode_profile,
    encode_assignment,
    one_in_three_satisfies,
    reduction_instance,
    sat_brute_force,
)
from pubgoods.solvers import decide_ntpne, enumerate_ntpne
from pubgoods.verification import random_cnf


def cnf(n, clauses):
    return CnfFormula.from_dimacs(n, clauses)


def _solutions(f):
    return [a for a in product((False, True), repeat=f.num_vars) if one_in_three_satisfies(f, a)]


def test_formula_validation():
    with pytest.raises(InputError):
        cnf(3, [[1, 2]])
    with pytest.raises(InputError):
        cnf(3, [[1, 1, 2]])
    with pytest.raises(InputError):
        cnf(3, [[1, -1, 2]])
    with pytest.raises(InputError):
        cnf(2, [[1, 2, 3]])


def test_sat_brute_force_examples():
    assert sat_brute_force(cnf(3, [[1, 2, 3]])) == (True, False, False)
    f = cnf(4, [[1, 2, 3], [-1, 2, 4]])
    assert one_in_three_satisfies(f, sat_brute_force(f))
    assert sat_brute_force(cnf(4, [[1, 2, 3], [-1, 2, 3]])) is None


@given(st.integers(0, 2**32), st.integers(3, 6), st.integers(1, 4))
def test_sat_brute_force_against_enumeration(seed, nv, nc):
    f = random_cnf(random.Random(seed), nv, nc)
    sols = _solutions(f)
    # counting order with variable 1 as the least significant bit
    key = lambda a: sum(int(b) << i for i, b in enumerate(a))
    assert sat_brute_force(f) == (min(sols, key=key) if sols else None)


def test_node_counts():
    one = cnf(3, [[1, 2, 3]])
    g, rmap = build_sat_reduction(one, "pairwise")
    assert g.n == 9 and not rmap.nodes("Transfer") and not rmap.nodes("Copy") and not rmap.nodes("Negation")
    assert build_sat_reduction(cnf(6, [[1, 2, 3], [4, 5, 6]]), "chain")[0].n == 19
    g, rmap = build_sat_reduction(cnf(5, [[1, 2, 3], [-1, 4, 5]]), "chain")
    assert g.n == 20 and len(rmap.nodes("Negation")) == 1 and not rmap.nodes("Copy")


def test_modes_differ_on_many_clauses():
    f = cnf(9, [[1, 2, 3], [4, 5, 6], [7, 8, 9], [1, 4, 7]])
    pw, _ = build_sat_reduction(f, "pairwise")
    ch, _ = build_sat_reduction(f, "chain")
    assert pw.n == 36 + 6 + 3 and ch.n == 36 + 3 + 3
    with pytest.raises(InputError):
        build_sat_reduction(f, "star")


def test_encode_examples():
    f = cnf(3, [[1, 2, 3]])
    _, rmap = build_sat_reduction(f)
    prof = encode_assignment(f, rmap, (True, False, False))
    # l1, its peripheral x, and inner nodes b, c
    assert [v for v in range(9) if prof[v]] == [0, 4, 5, 6]
    prof2 = encode_assignment(f, rmap, (False, True, False))
    assert [v for v in range(9) if prof2[v]] == [1, 3, 5, 7]
    with pytest.raises(InputError):
        encode_assignment(f, rmap, (True, True, False))


@pytest.mark.parametrize("mode", MODES)
def test_two_clause_encode_decode(mode):
    f = cnf(5, [[1, 2, 3], [-1, 4, 5]])
    inst, rmap = reduction_instance(f, mode)
    sols = _solutions(f)
    assert sols
    for a in sols:
        prof = encode_assignment(f, rmap, a)
        assert is_ntpne(inst, prof)
        assert decode_profile(f, rmap, prof) == a


@pytest.mark.parametrize("mode", MODES)
def test_every_equilibrium_decodes_to_a_solution(mode):
    f = cnf(4, [[1, 2, 3], [-1, 2, 4]])
    inst, rmap = reduction_instance(f, mode)
    eqs = enumerate_ntpne(inst)
    assert len(eqs) == len(_solutions(f))
    assert sorted(decode_profile(f, rmap, e, inst.graph) for e in eqs) == sorted(_solutions(f))


@pytest.mark.parametrize("mode", MODES)
def test_unsatisfiable_has_no_equilibrium(mode):
    f = cnf(3, [[1, 2, 3], [-1, 2, 3]])
    assert sat_brute_force(f) is None
    inst, _ = reduction_instance(f, mode)
    assert not decide_ntpne(inst).exists


def test_decode_rejects_non_equilibrium():
    f = cnf(3, [[1, 2, 3]])
    g, rmap = build_sat_reduction(f)
    with pytest.raises(InputError):
        decode_profile(f, rmap, (0,) * g.n)


def test_negative_only_variable_decodes_false_literal():
    f = cnf(3, [[-1, -2, -3]])
    inst, rmap = reduction_instance(f)
    for e in enumerate_ntpne(inst):
        a = decode_profile(f, rmap, e)
        assert one_in_three_satisfies(f, a)


@given(st.integers(0, 2**32))
def test_reduction_equivalence_property(seed):
    rng = random.Random(seed)
    f = random_cnf(rng, rng.randint(3, 5), rng.randint(1, 2))
    for mode in MODES:
        inst, rmap = reduction_instance(f, mode)
        res = decide_ntpne(inst)
        assert res.exists == (sat_brute_force(f) is not None)
        if res.exists:
            assert one_in_three_satisfies(f, decode_profile(f, rmap, res.witness, inst.graph))


@given(st.integers(0, 2**32))
def test_chain_degree_bound_on_larger_formulas(seed):
    rng = random.Random(seed)
    f = random_cnf(rng, rng.randint(3, 8), rng.randint(1, 12))
    g, _ = build_sat_reduction(f, "chain")
    assert g.max_degree() <= 13


def test_map_roles_cover_every_node():
    f = cnf(5, [[1, 2, 3], [-1, 4, 5], [1, -4, 2]])
    for mode in MODES:
        g, rmap = build_sat_reduction(f, mode)
        assert len(rmap) == g.n
        kinds = {r.kind for r in rmap}
        assert {"Literal", "Inner", "Peripheral", "Transfer", "Copy", "Negation"} <= kinds
    assert isinstance(g, Graph) and PggInstance(g, SINGLE_NEIGHBOR)
