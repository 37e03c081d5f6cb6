"""Counterexample search for patterns whose complexity is open."""

from __future__ import annotations

from typing import Optional

from ..core import Graph, Pattern, PggInstance
from ..solvers.search import decide_ntpne
from .generators import connected_graphs
from .oracles import brute_force_exists


def conjecture_search(pattern: Pattern, n_max: int, n_min: int = 2) -> Optional[Graph]:
    """Smallest connected graph (fewest nodes, then fewest edges) with no NTPNE
    under ``pattern``, or None if every graph up to ``n_max`` nodes has one.

    Connected graphs suffice: under a flat pattern a disconnected graph lacks an
    NTPNE only if each component does, and under a non-flat pattern only if
    some component lacks a PNE altogether. Single nodes are skipped. A hit is
    re-checked by full enumeration before it is returned.
    """
    if n_max > 9:
        raise ValueError("conjecture search is limited to n_max <= 9")
    for n in range(max(n_min, 1), n_max + 1):
        for g in connected_graphs(n):
            inst = PggInstance(g, pattern)
            if not decide_ntpne(inst).exists:
                if brute_force_exists(inst):
                    raise RuntimeError(f"search and enumeration disagree on {g.edges()}")
                return g
    return None
