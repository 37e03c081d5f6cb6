"""Brute-force reference answers, independent of the search code."""

from __future__ import annotations

from itertools import product
from typing import List

from ..core import PggInstance, Profile, pattern_at


def brute_force_pne(instance: PggInstance, nontrivial: bool = False) -> List[Profile]:
    """All PNEs by checking every one of the ``2^n`` profiles, in lexicographic order."""
    graph, pattern = instance.graph, instance.pattern
    n = graph.n
    table = [pattern_at(pattern, k) for k in range(n + 1)]
    adj = graph.adjacency
    out = []
    for bits in product((0, 1), repeat=n):
        if nontrivial and not any(bits):
            continue
        if all(bits[v] == table[sum(bits[u] for u in adj[v])] for v in range(n)):
            out.append(bits)
    return out


def brute_force_exists(instance: PggInstance) -> bool:
    return bool(brute_force_pne(instance, nontrivial=True))
