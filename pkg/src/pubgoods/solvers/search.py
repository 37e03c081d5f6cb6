"""Exact equilibrium search by backtracking with supporter-count interval pruning.

Nodes are assigned in ascending id order. For every node we track the number
of neighbours already assigned 1 (``lo``) and the number still unassigned, so
its final supporter count lies in ``[lo, lo + unassigned]``. A branch dies as
soon as an assigned node has no count in that interval whose best response
equals its own bit.
"""

from __future__ import annotations

import enum
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Sequence, Tuple

from ..core import Graph, Pattern, PggInstance, Profile, pattern_at


class Status(enum.Enum):
    EXISTS = "exists"
    NOT_EXISTS = "not_exists"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SolveResult:
    status: Status
    witness: Optional[Profile] = None
    nodes_explored: int = 0
    elapsed: float = 0.0
    method: str = ""

    @property
    def exists(self) -> bool:
        return self.status is Status.EXISTS


class _Search:
    def __init__(self, graph: Graph, pattern: Pattern, nontrivial: bool):
        self.n = graph.n
        self.adj = graph.adjacency
        self.nontrivial = nontrivial
        top = graph.max_degree() + 2
        # hits[b][k] = #{j < k : T[j] == b}
        self.hits = []
        for b in (0, 1):
            acc = [0]
            for k in range(top):
                acc.append(acc[-1] + (pattern_at(pattern, k) == b))
            self.hits.append(acc)
        self.explored = 0

    def _feasible(self, v: int, val, lo, free) -> bool:
        h = self.hits[val[v]]
        return h[lo[v] + free[v] + 1] - h[lo[v]] > 0

    def run(self, prefix: Sequence[int], order: Tuple[int, ...], limit: Optional[int]) -> List[Profile]:
        """All solutions in the subtree fixed by ``prefix``, in DFS ``order``."""
        n, adj = self.n, self.adj
        val = [-1] * n
        lo = [0] * n
        free = [len(a) for a in adj]
        found: List[Profile] = []
        ones = 0
        feasible = self._feasible

        def assign(x: int, b: int) -> bool:
            val[x] = b
            ok = True
            for u in adj[x]:
                free[u] -= 1
                if b:
                    lo[u] += 1
            if not feasible(x, val, lo, free):
                ok = False
            else:
                for u in adj[x]:
                    if val[u] >= 0 and not feasible(u, val, lo, free):
                        ok = False
                        break
            return ok

        def unassign(x: int, b: int) -> None:
            for u in adj[x]:
                free[u] += 1
                if b:
                    lo[u] -= 1
            val[x] = -1

        def dfs(x: int) -> bool:
            nonlocal ones
            if x == n:
                if self.nontrivial and ones == 0:
                    return False
                found.append(tuple(val))
                return limit is not None and len(found) >= limit
            choices = (prefix[x],) if x < len(prefix) else order
            for b in choices:
                self.explored += 1
                ok = assign(x, b)
                ones += b
                stop = ok and dfs(x + 1)
                ones -= b
                unassign(x, b)
                if stop:
                    return True
            return False

        if limit is not None and limit <= 0:
            return found
        old = sys.getrecursionlimit()
        if n + 100 > old:
            sys.setrecursionlimit(n + 100)
        dfs(0)
        return found


def _split_depth(n: int, workers: int) -> int:
    return min(n, max(1, math.ceil(math.log2(workers * 4))))


def _run_subtree(args) -> Tuple[List[Profile], int]:
    graph, pattern, nontrivial, prefix, order, limit = args
    s = _Search(graph, pattern, nontrivial)
    out = s.run(prefix, order, limit)
    return out, s.explored


def _run_split(instance: PggInstance, nontrivial: bool, order, limit, workers: int):
    """Run the search over ``2^d`` fixed prefixes, returning per-prefix results in
    prefix order (prefixes enumerated in ``order``)."""
    d = _split_depth(instance.graph.n, workers)
    prefixes = list(product(order, repeat=d))
    jobs = [(instance.graph, instance.pattern, nontrivial, p, order, limit) for p in prefixes]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_subtree, jobs))


def decide_ntpne(instance: PggInstance, workers: int = 1) -> SolveResult:
    """Decide whether a non-trivial PNE exists; on success return a witness.

    Value 1 is tried before 0, so the witness is the first solution in that
    order; it does not depend on ``workers``.
    """
    t0 = time.perf_counter()
    order = (1, 0)
    if workers > 1 and instance.graph.n > 1:
        results = _run_split(instance, True, order, 1, workers)
        explored = sum(e for _, e in results)
        witness = next((sols[0] for sols, _ in results if sols), None)
    else:
        s = _Search(instance.graph, instance.pattern, nontrivial=True)
        sols = s.run((), order, 1)
        explored = s.explored
        witness = sols[0] if sols else None
    status = Status.EXISTS if witness is not None else Status.NOT_EXISTS
    return SolveResult(status, witness, explored, time.perf_counter() - t0, "backtrack")


def enumerate_pne(
    instance: PggInstance, limit: Optional[int] = None, workers: int = 1, nontrivial: bool = False
) -> List[Profile]:
    """All pure Nash equilibria in lexicographic order (0 < 1, node 0 first)."""
    order = (0, 1)
    if workers > 1 and instance.graph.n > 1:
        out: List[Profile] = []
        for sols, _ in _run_split(instance, nontrivial, order, limit, workers):
            out.extend(sols)
    else:
        out = _Search(instance.graph, instance.pattern, nontrivial).run((), order, limit)
    return out if limit is None else out[:limit]


def enumerate_ntpne(instance: PggInstance, limit: Optional[int] = None, workers: int = 1) -> List[Profile]:
    """All non-trivial PNEs in lexicographic order, truncated at ``limit``."""
    return enumerate_pne(instance, limit=limit, workers=workers, nontrivial=True)
