from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from pubgoods.core import SINGLE_NEIGHBOR, Graph, InputError, Pattern, PggInstance, is_pne
from pubgoods.solvers import Status, gf2_solve, parity_pne_set, parity_solve
from pubgoods.verification import brute_force_pne

ALT = Pattern.parse(":10")
PARITY = [Pattern.parse(t) for t in (":10", ":01", ":1", ":0")]


def test_examples():
    assert parity_solve(Graph.empty(1), ALT).witness == (1,)
    tri = parity_pne_set(Graph.complete(3), ALT)
    assert len(tri) == 4 and (1, 1, 1) in tri
    assert parity_pne_set(Graph.path(2), ALT) == [(0, 1), (1, 0)]
    assert parity_solve(Graph.path(2), ALT).status is Status.EXISTS


def test_rejects_non_parity():
    with pytest.raises(InputError):
        parity_solve(Graph.path(2), SINGLE_NEIGHBOR)


def _eval(rows, x):
    return [bin(r & x).count("1") & 1 for r in rows]


@given(st.integers(1, 10), st.integers(0, 10), st.integers(0, 2**32))
def test_gf2_solve_against_enumeration(n_cols, n_rows, seed):
    rng = random.Random(seed)
    rows = [rng.getrandbits(n_cols) for _ in range(n_rows)]
    rhs = [rng.getrandbits(1) for _ in range(n_rows)]
    sols = {x for x in range(1 << n_cols) if _eval(rows, x) == rhs}
    res = gf2_solve(rows, rhs, n_cols)
    if not sols:
        assert res is None
        return
    particular, basis = res
    span = {0}
    for b in basis:
        span |= {s ^ b for s in span}
    assert {particular ^ s for s in span} == sols


@given(graphs(max_n=9), st.sampled_from(PARITY))
def test_parity_matches_oracle(g, p):
    inst = PggInstance(g, p)
    assert parity_pne_set(g, p) == brute_force_pne(inst)
    res = parity_solve(g, p)
    assert res.exists == bool(brute_force_pne(inst, nontrivial=True))
    if res.exists:
        assert is_pne(inst, res.witness) and any(res.witness)
