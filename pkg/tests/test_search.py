from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import graphs, patterns
from pubgoods.core import AT_MOST_SINGLE_NEIGHBOR, BEST_SHOT, SINGLE_NEIGHBOR, Graph, Pattern, PggInstance, is_ntpne
from pubgoods.reductions import clause_gadget_edges
from pubgoods.solvers import Status, auto_solve, decide_ntpne, enumerate_ntpne, enumerate_pne
from pubgoods.verification import brute_force_pne, random_graph


def sn(g):
    return PggInstance(g, SINGLE_NEIGHBOR)


def test_decide_examples():
    res = decide_ntpne(sn(Graph.path(5)))
    assert res.status is Status.EXISTS and res.witness == (1, 1, 0, 1, 1)
    assert decide_ntpne(sn(Graph.path(3))).status is Status.NOT_EXISTS
    assert decide_ntpne(sn(Graph.cycle(6))).exists


def test_decide_empty_graph():
    res = decide_ntpne(sn(Graph.empty(0)))
    assert res.status is Status.NOT_EXISTS and res.witness is None


def test_enumerate_examples():
    gadget = Graph.from_edges(9, clause_gadget_edges(0))
    sols = enumerate_ntpne(sn(gadget))
    assert len(sols) == 3
    assert sorted(sum(s[:3]) for s in sols) == [1, 1, 1]
    assert enumerate_ntpne(sn(Graph.path(3))) == []
    k4 = enumerate_ntpne(sn(Graph.complete(4)))
    expected = sorted(tuple(int(v in pair) for v in range(4)) for pair in combinations(range(4), 2))
    assert k4 == expected


def test_enumerate_limit():
    all_sols = enumerate_ntpne(sn(Graph.complete(4)))
    assert enumerate_ntpne(sn(Graph.complete(4)), limit=2) == all_sols[:2]
    assert enumerate_ntpne(sn(Graph.complete(4)), limit=0) == []


@given(graphs(max_n=8), patterns())
def test_enumeration_matches_oracle(g, p):
    inst = PggInstance(g, p)
    assert enumerate_pne(inst) == brute_force_pne(inst)
    assert enumerate_ntpne(inst) == brute_force_pne(inst, nontrivial=True)


@given(graphs(max_n=9), patterns())
def test_decide_matches_oracle(g, p):
    inst = PggInstance(g, p)
    res = decide_ntpne(inst)
    assert res.exists == bool(brute_force_pne(inst, nontrivial=True))
    if res.exists:
        assert is_ntpne(inst, res.witness)


@settings(max_examples=10)
@given(graphs(min_n=2, max_n=8), patterns())
def test_parallel_matches_serial(g, p):
    inst = PggInstance(g, p)
    assert enumerate_pne(inst, workers=2) == enumerate_pne(inst)
    assert decide_ntpne(inst, workers=2).witness == decide_ntpne(inst).witness


@pytest.mark.parametrize("pattern", [BEST_SHOT, AT_MOST_SINGLE_NEIGHBOR])
def test_auto_solve_always_exists(pattern):
    for seed in range(20):
        g = random_graph(1 + seed % 15, 0.3, seed)
        res = auto_solve(PggInstance(g, pattern))
        assert res.exists and is_ntpne(PggInstance(g, pattern), res.witness)


def test_auto_solve_dispatch():
    assert auto_solve(sn(Graph.path(3))).status is Status.NOT_EXISTS
    assert auto_solve(PggInstance(Graph.path(3), BEST_SHOT)).method == "bestshot"
    assert auto_solve(PggInstance(Graph.path(3), AT_MOST_SINGLE_NEIGHBOR)).method == "amsn"
    assert auto_solve(PggInstance(Graph.path(3), Pattern.parse(":10"))).method == "parity"
    assert auto_solve(sn(Graph.path(3))).method == "backtrack"
