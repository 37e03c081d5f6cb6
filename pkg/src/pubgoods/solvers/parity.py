"""Parity patterns solved as linear systems over GF(2).

If ``T[k]`` depends only on ``k mod 2`` then ``T[k] = a + b*k (mod 2)`` with
``a = T[0]`` and ``b = T[0] xor T[1]``, so a profile is a PNE iff for every
node ``s_i + b * sum_{j in N(i)} s_j = a``.
"""

from __future__ import annotations

import time
from typing import List, Optional, Tuple

from ..core import Graph, InputError, Pattern, Profile, is_parity_pattern, pattern_at
from .search import SolveResult, Status


def gf2_solve(rows: List[int], rhs: List[int], n_cols: int) -> Optional[Tuple[int, List[int]]]:
    """Solve ``rows * x = rhs`` over GF(2), rows being int bitsets (bit j = column j).

    Returns ``(particular, nullspace_basis)`` with free variables set to 0 in
    the particular solution, or ``None`` if the system is inconsistent.
    """
    work = [(r, b & 1) for r, b in zip(rows, rhs)]
    pivots: List[int] = []
    row = 0
    for col in range(n_cols):
        piv = next((i for i in range(row, len(work)) if work[i][0] >> col & 1), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        pr, pb = work[row]
        for i in range(len(work)):
            if i != row and work[i][0] >> col & 1:
                work[i] = (work[i][0] ^ pr, work[i][1] ^ pb)
        pivots.append(col)
        row += 1
        if row == len(work):
            break
    if any(r == 0 and b for r, b in work[row:]):
        return None
    particular = 0
    for i, col in enumerate(pivots):
        if work[i][1]:
            particular |= 1 << col
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for i, col in enumerate(pivots):
            if work[i][0] >> free & 1:
                vec |= 1 << col
        basis.append(vec)
    return particular, basis


def parity_system(graph: Graph, pattern: Pattern) -> Tuple[List[int], List[int]]:
    if not is_parity_pattern(pattern):
        raise InputError(f"pattern {pattern} is not determined by parity")
    a = pattern_at(pattern, 0)
    b = a ^ pattern_at(pattern, 1)
    rows = [(1 << i) | (graph.masks[i] if b else 0) for i in range(graph.n)]
    return rows, [a] * graph.n


def _to_profile(vec: int, n: int) -> Profile:
    return tuple(vec >> i & 1 for i in range(n))


def parity_pne_set(graph: Graph, pattern: Pattern) -> List[Profile]:
    """Every PNE (trivial included) via the affine solution space. Exponential in
    the nullity; for tests and small graphs."""
    rows, rhs = parity_system(graph, pattern)
    sol = gf2_solve(rows, rhs, graph.n)
    if sol is None:
        return []
    particular, basis = sol
    out = []
    for combo in range(1 << len(basis)):
        vec = particular
        for j, v in enumerate(basis):
            if combo >> j & 1:
                vec ^= v
        out.append(_to_profile(vec, graph.n))
    return sorted(out)


def parity_solve(graph: Graph, pattern: Pattern) -> SolveResult:
    """Find a non-trivial PNE for a parity pattern by Gaussian elimination."""
    t0 = time.perf_counter()
    rows, rhs = parity_system(graph, pattern)
    sol = gf2_solve(rows, rhs, graph.n)
    witness = None
    if sol is not None:
        particular, basis = sol
        if particular:
            witness = _to_profile(particular, graph.n)
        elif basis:
            witness = _to_profile(basis[0], graph.n)
    status = Status.EXISTS if witness is not None else Status.NOT_EXISTS
    return SolveResult(status, witness, 0, time.perf_counter() - t0, "parity")
