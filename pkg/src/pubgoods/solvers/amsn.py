"""Equilibria for the At-Most-Single-Neighbor pattern ``[1,1,0,0,...]``.

Both algorithms seed the profile with an independent set ``S`` played as 1,
then sweep the remaining nodes in ascending id, turning a node on iff it sees
exactly one producing neighbour at that moment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Tuple

from ..core import Graph, Profile
from .independent_sets import greedy_maximal_is, is_maximal_independent, maximum_is_exact


def complete_from_seed(graph: Graph, seed: Iterable[int]) -> Profile:
    """The sweep: seed nodes play 1, others in ascending id play 1 iff exactly one
    neighbour plays 1 when they are visited."""
    seed = list(seed)
    bits = [0] * graph.n
    support = [0] * graph.n
    for v in seed:
        bits[v] = 1
    for v in range(graph.n):
        if bits[v]:
            for u in graph.adjacency[v]:
                support[u] += 1
    seed_set = set(seed)
    for v in range(graph.n):
        if v in seed_set:
            continue
        if support[v] == 1:
            bits[v] = 1
            for u in graph.adjacency[v]:
                support[u] += 1
    return tuple(bits)


def amsn_algorithm1(graph: Graph) -> Profile:
    """Seed with an exact maximum independent set. Exponential in the worst case."""
    return complete_from_seed(graph, maximum_is_exact(graph))


def _deviators(graph: Graph, bits: Profile) -> List[int]:
    out = []
    for v in range(graph.n):
        k = 0
        for u in graph.adjacency[v]:
            k += bits[u]
        if bits[v] != (1 if k <= 1 else 0):
            out.append(v)
    return out


@dataclass
class Algorithm2Run:
    profile: Profile
    iterations: int
    seed_history: List[Tuple[int, ...]] = field(default_factory=list)


def amsn_algorithm2_trace(graph: Graph, check_invariants: bool = True) -> Algorithm2Run:
    """Polynomial-time repair loop, recording the seed set after every iteration.

    When the sweep is not an equilibrium, the smallest deviating node ``u`` is
    dropped from the seed and each neighbour of ``u`` with no neighbour left in
    the seed is added. The seed stays a maximal independent set and grows by at
    least one per iteration, so there are at most ``n`` iterations.
    """
    seed = list(greedy_maximal_is(graph))
    history = [tuple(seed)]
    iterations = 0
    while True:
        bits = complete_from_seed(graph, seed)
        bad = _deviators(graph, bits)
        if not bad:
            return Algorithm2Run(bits, iterations, history)
        iterations += 1
        if iterations > graph.n:
            raise RuntimeError("repair loop exceeded |V| iterations")
        u = bad[0]
        in_seed = 0
        for v in seed:
            in_seed |= 1 << v
        if check_invariants and not in_seed >> u & 1:
            raise RuntimeError(f"deviating node {u} is outside the seed set")
        in_seed &= ~(1 << u)
        for x in graph.adjacency[u]:
            if not graph.masks[x] & in_seed and not in_seed >> x & 1:
                in_seed |= 1 << x
        new_seed = [v for v in range(graph.n) if in_seed >> v & 1]
        if check_invariants:
            if len(new_seed) <= len(seed):
                raise RuntimeError("seed set did not grow during repair")
            if not is_maximal_independent(graph, new_seed):
                raise RuntimeError("seed set is no longer a maximal independent set")
        seed = new_seed
        history.append(tuple(seed))


def amsn_algorithm2(graph: Graph) -> Profile:
    return amsn_algorithm2_trace(graph).profile
