"""Seeded graph and formula generators."""

from __future__ import annotations

import random
from itertools import combinations, permutations
from typing import Iterator, List

import networkx as nx

from ..core import Graph
from ..reductions.sat import CnfFormula, Literal


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): pairs ``u < v`` in lexicographic order, each kept iff
    the next draw of ``random.Random(seed)`` is below ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` nodes (``2^(n choose 2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


def _canonical_mask(n: int, edges) -> int:
    best = None
    index = {e: i for i, e in enumerate(combinations(range(n), 2))}
    for perm in permutations(range(n)):
        mask = 0
        for u, v in edges:
            a, b = perm[u], perm[v]
            mask |= 1 << index[(a, b) if a < b else (b, a)]
        if best is None or mask < best:
            best = mask
    return best


def nonisomorphic_graphs(n: int) -> List[Graph]:
    """One representative per isomorphism class, by brute-force canonical form.
    Practical for ``n <= 6``."""
    seen = {}
    for g in all_graphs(n):
        key = _canonical_mask(n, g.edges())
        if key not in seen:
            seen[key] = g
    return sorted(seen.values(), key=lambda g: (g.num_edges, g.edges()))


def _from_nx(g: nx.Graph) -> Graph:
    order = {v: i for i, v in enumerate(sorted(g.nodes()))}
    return Graph.from_edges(len(order), [(order[u], order[v]) for u, v in g.edges()])


def _connected_nx(n: int) -> List[nx.Graph]:
    if n <= 7:
        return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n and n > 0 and nx.is_connected(g)]
    # every connected graph has a non-cut vertex, so augmenting all connected
    # (n-1)-node graphs by one vertex reaches every class
    buckets = {}
    out = []
    for g in _connected_nx(n - 1):
        for mask in range(1, 1 << (n - 1)):
            h = g.copy()
            h.add_node(n - 1)
            h.add_edges_from((n - 1, u) for u in range(n - 1) if mask >> u & 1)
            key = nx.weisfeiler_lehman_graph_hash(h)
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(h, other) for other in bucket):
                continue
            bucket.append(h)
            out.append(h)
    return out


def connected_graphs(n: int) -> List[Graph]:
    """Connected graphs on ``n`` nodes up to isomorphism, by edge count.

    Uses the networkx graph atlas up to 7 nodes and vertex augmentation beyond
    (slow: n=8 takes minutes).
    """
    return sorted((_from_nx(g) for g in _connected_nx(n)), key=lambda g: (g.num_edges, g.edges()))


def random_cnf(rng: random.Random, num_vars: int, num_clauses: int) -> CnfFormula:
    clauses = []
    for _ in range(num_clauses):
        vars_ = rng.sample(range(num_vars), 3)
        clauses.append(tuple(Literal(v, rng.random() < 0.5) for v in vars_))
    return CnfFormula(num_vars, tuple(clauses))


FIXED_CNFS = [
    (3, [[1, 2, 3]]),
    (3, [[-1, -2, -3]]),
    (5, [[1, 2, 3], [-1, 4, 5]]),
    (6, [[1, 2, 3], [4, 5, 6]]),
    (4, [[1, 2, 3], [1, 2, 4]]),
    (4, [[1, 2, 3], [-1, -2, 4]]),
    (3, [[1, 2, 3], [-1, 2, 3], [1, -2, -3]]),
    (3, [[1, 2, 3], [-1, -2, -3], [1, -2, 3]]),
    (4, [[1, 2, 3], [1, 2, 4], [-3, -4, 1]]),
    (6, [[1, 2, 3], [-1, 4, 5], [-4, -5, 6]]),
    (5, [[1, 2, 3], [2, 3, 4], [-1, -4, 5]]),
    (3, [[1, 2, 3], [-1, -2, 3], [-1, 2, -3]]),
]


def cnf_corpus(size: int = 240, seed: int = 20220912) -> List[CnfFormula]:
    """The fixed formulas above followed by seeded random ones with 1..3 clauses
    over 3..6 variables."""
    out = [CnfFormula.from_dimacs(n, cl) for n, cl in FIXED_CNFS]
    rng = random.Random(seed)
    while len(out) < size:
        out.append(random_cnf(rng, rng.randint(3, 6), rng.randint(1, 3)))
    return out[:size]
