"""Equilibrium solvers: exact search plus the polynomial special cases."""

from __future__ import annotations

import time

from ..core import AT_MOST_SINGLE_NEIGHBOR, BEST_SHOT, PggInstance, is_parity_pattern
from .amsn import Algorithm2Run, amsn_algorithm1, amsn_algorithm2, amsn_algorithm2_trace, complete_from_seed
from .independent_sets import (
    IndependentSet,
    best_shot_solve,
    greedy_maximal_is,
    is_independent,
    is_maximal_independent,
    maximum_is_exact,
)
from .parity import gf2_solve, parity_pne_set, parity_solve
from .search import SolveResult, Status, decide_ntpne, enumerate_ntpne, enumerate_pne


def auto_solve(instance: PggInstance, workers: int = 1) -> SolveResult:
    """Use a polynomial algorithm when the pattern has one, else exact search."""
    graph, pattern = instance.graph, instance.pattern
    t0 = time.perf_counter()
    if graph.n > 0 and pattern == BEST_SHOT:
        prof = best_shot_solve(graph)
        return SolveResult(Status.EXISTS, prof, 0, time.perf_counter() - t0, "bestshot")
    if graph.n > 0 and pattern == AT_MOST_SINGLE_NEIGHBOR:
        prof = amsn_algorithm2(graph)
        return SolveResult(Status.EXISTS, prof, 0, time.perf_counter() - t0, "amsn")
    if is_parity_pattern(pattern):
        return parity_solve(graph, pattern)
    return decide_ntpne(instance, workers=workers)


__all__ = [
    "Algorithm2Run",
    "IndependentSet",
    "SolveResult",
    "Status",
    "amsn_algorithm1",
    "amsn_algorithm2",
    "amsn_algorithm2_trace",
    "auto_solve",
    "best_shot_solve",
    "complete_from_seed",
    "decide_ntpne",
    "enumerate_ntpne",
    "enumerate_pne",
    "gf2_solve",
    "greedy_maximal_is",
    "is_independent",
    "is_maximal_independent",
    "maximum_is_exact",
    "parity_pne_set",
    "parity_solve",
]
