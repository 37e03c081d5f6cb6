from __future__ import annotations

from itertools import combinations

from hypothesis import given

from conftest import graphs
from pubgoods.core import BEST_SHOT, Graph, PggInstance, is_ntpne
from pubgoods.solvers import (
    best_shot_solve,
    greedy_maximal_is,
    is_independent,
    is_maximal_independent,
    maximum_is_exact,
)


def _oracle_max_size(g):
    for k in range(g.n, -1, -1):
        if any(is_independent(g, c) for c in combinations(range(g.n), k)):
            return k
    return 0


def test_greedy_examples():
    assert greedy_maximal_is(Graph.complete(3)) == (0,)
    assert greedy_maximal_is(Graph.empty(4)) == (0, 1, 2, 3)
    assert greedy_maximal_is(Graph.star(3)) == (0,)


def test_maximum_examples():
    assert len(maximum_is_exact(Graph.path(4))) == 2
    assert len(maximum_is_exact(Graph.complete(5))) == 1
    assert len(maximum_is_exact(Graph.cycle(6))) == 3
    assert maximum_is_exact(Graph.path(4)) == (0, 2)


def test_best_shot_examples():
    assert best_shot_solve(Graph.star(3)) == (1, 0, 0, 0)
    assert best_shot_solve(Graph.empty(2)) == (1, 1)
    assert best_shot_solve(Graph.complete(3)) == (1, 0, 0)


@given(graphs(max_n=10))
def test_greedy_is_maximal(g):
    s = greedy_maximal_is(g)
    assert is_maximal_independent(g, s)
    assert list(s) == sorted(s)


@given(graphs(max_n=10))
def test_maximum_matches_oracle(g):
    s = maximum_is_exact(g)
    assert is_independent(g, s)
    assert len(s) == _oracle_max_size(g)


@given(graphs(max_n=9))
def test_maximum_is_lexicographically_first(g):
    s = maximum_is_exact(g)
    best = min(c for c in combinations(range(g.n), len(s)) if is_independent(g, c))
    assert s == best


@given(graphs(min_n=1, max_n=10))
def test_best_shot_equilibria_are_maximal_independent_sets(g):
    prof = best_shot_solve(g)
    assert is_ntpne(PggInstance(g, BEST_SHOT), prof)
    assert is_maximal_independent(g, [v for v in range(g.n) if prof[v]])
