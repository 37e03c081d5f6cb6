"""Independent sets: greedy maximal and exact maximum (branch and bound)."""

from __future__ import annotations

from typing import Iterable, Tuple

from ..core import Graph, Profile

IndependentSet = Tuple[int, ...]


def is_independent(graph: Graph, members: Iterable[int]) -> bool:
    mask = 0
    for v in members:
        mask |= 1 << v
    return all(not (graph.masks[v] & mask) for v in members)


def is_maximal_independent(graph: Graph, members: Iterable[int]) -> bool:
    members = list(members)
    if not is_independent(graph, members):
        return False
    mask = sum(1 << v for v in set(members))
    return all(mask >> v & 1 or graph.masks[v] & mask for v in range(graph.n))


def greedy_maximal_is(graph: Graph) -> IndependentSet:
    """Scan nodes in ascending id, keeping a node iff no kept neighbour."""
    taken = 0
    out = []
    for v in range(graph.n):
        if not graph.masks[v] & taken:
            taken |= 1 << v
            out.append(v)
    return tuple(out)


def maximum_is_exact(graph: Graph) -> IndependentSet:
    """A maximum independent set; among ties, the lexicographically smallest.

    Include-before-exclude DFS over ascending ids visits sets in lexicographic
    order of their sorted member lists, so keeping only strict improvements
    yields the smallest one. Exponential; meant for small graphs.
    """
    n = graph.n
    masks = graph.masks
    greedy = len(greedy_maximal_is(graph))
    best_size = greedy - 1
    best: list = []
    chosen: list = []

    def dfs(v: int, candidates: int) -> None:
        nonlocal best_size, best
        if len(chosen) + bin(candidates).count("1") <= best_size:
            return
        while v < n and not candidates >> v & 1:
            v += 1
        if v == n:
            best_size = len(chosen)
            best = list(chosen)
            return
        chosen.append(v)
        dfs(v + 1, candidates & ~masks[v] & ~(1 << v))
        chosen.pop()
        dfs(v + 1, candidates & ~(1 << v))

    dfs(0, (1 << n) - 1)
    return tuple(best)


def best_shot_solve(graph: Graph) -> Profile:
    """PNE of the Best-Shot pattern ``[1,0,0,...]``: indicator of the greedy MIS."""
    members = set(greedy_maximal_is(graph))
    return tuple(int(v in members) for v in range(graph.n))
