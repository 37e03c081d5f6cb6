from __future__ import annotations

import pytest
from hypothesis import given

from conftest import graphs
from pubgoods.core import AT_MOST_SINGLE_NEIGHBOR, Graph, PggInstance, is_ntpne
from pubgoods.solvers import (
    amsn_algorithm1,
    amsn_algorithm2,
    amsn_algorithm2_trace,
    complete_from_seed,
    is_maximal_independent,
)
from pubgoods.verification import random_graph


def amsn(g):
    return PggInstance(g, AT_MOST_SINGLE_NEIGHBOR)


def test_algorithm1_examples():
    assert amsn_algorithm1(Graph.complete(3)) == (1, 1, 0)
    assert amsn_algorithm1(Graph.path(2)) == (1, 1)
    assert amsn_algorithm1(Graph.empty(3)) == (1, 1, 1)


def test_algorithm2_examples():
    assert is_ntpne(amsn(Graph.complete(3)), amsn_algorithm2(Graph.complete(3)))
    g = random_graph(50, 0.1, 7)
    assert is_ntpne(amsn(g), amsn_algorithm2(g))
    assert amsn_algorithm2(Graph.empty(1)) == (1,)


def test_seed_sweep_sets_seed_to_one():
    g = Graph.path(4)
    prof = complete_from_seed(g, [0, 2])
    assert prof[0] == prof[2] == 1


@given(graphs(min_n=1, max_n=9))
def test_algorithm1_is_equilibrium(g):
    assert is_ntpne(amsn(g), amsn_algorithm1(g))


@given(graphs(min_n=1, max_n=12))
def test_algorithm2_trace_invariants(g):
    run = amsn_algorithm2_trace(g)
    assert is_ntpne(amsn(g), run.profile)
    assert run.iterations <= g.n
    assert len(run.seed_history) == run.iterations + 1
    for before, after in zip(run.seed_history, run.seed_history[1:]):
        assert len(after) > len(before)
    for seed in run.seed_history:
        assert is_maximal_independent(g, seed)


@pytest.mark.parametrize("p", [0.02, 0.1, 0.5])
def test_algorithm2_large_random(p):
    for seed in range(5):
        g = random_graph(120, p, seed)
        run = amsn_algorithm2_trace(g)
        assert is_ntpne(amsn(g), run.profile) and run.iterations <= g.n
