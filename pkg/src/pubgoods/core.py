"""Games, patterns and the equilibrium predicates.

A game is an undirected graph plus a best-response pattern ``T``: a node
playing in a profile ``s`` is happy iff ``s[v] == T[k]`` where ``k`` is the
number of neighbours of ``v`` playing 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple

Profile = Tuple[int, ...]


class InputError(ValueError):
    """Raised when a caller hands in data violating a documented precondition."""


def _primitive_period(bits: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(bits)
    for p in range(1, n + 1):
        if n % p == 0 and bits[:p] * (n // p) == bits:
            return bits[:p]
    return bits


def _as_bits(seq: Iterable, what: str) -> Tuple[int, ...]:
    out = []
    for b in seq:
        if b in (0, 1, "0", "1", True, False):
            out.append(int(b))
        else:
            raise InputError(f"{what} must contain only 0/1, got {b!r}")
    return tuple(out)


@dataclass(frozen=True)
class Pattern:
    """Eventually periodic best-response pattern ``prefix + tail + tail + ...``.

    The representation is canonicalised on construction (primitive tail, no
    prefix bits that merely repeat the tail), so ``==`` is semantic equality.
    """

    prefix: Tuple[int, ...] = ()
    tail: Tuple[int, ...] = (0,)

    def __post_init__(self) -> None:
        prefix = list(_as_bits(self.prefix, "prefix"))
        tail = _as_bits(self.tail, "tail")
        if not tail:
            raise InputError("pattern tail must be nonempty")
        tail = list(_primitive_period(tail))
        while prefix and prefix[-1] == tail[-1]:
            prefix.pop()
            tail = [tail[-1]] + tail[:-1]
        object.__setattr__(self, "prefix", tuple(prefix))
        object.__setattr__(self, "tail", tuple(tail))

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        """Parse ``"prefixbits:tailbits"``, e.g. ``"01:0"`` for Single-Neighbor."""
        text = text.strip()
        if text.count(":") != 1:
            raise InputError(f"pattern must look like 'prefix:tail', got {text!r}")
        pre, tail = text.split(":")
        if not tail:
            raise InputError("pattern tail must be nonempty")
        return cls(_as_bits(pre, "prefix"), _as_bits(tail, "tail"))

    @classmethod
    def finite(cls, bits: Sequence[int]) -> "Pattern":
        """Pattern equal to ``bits`` followed by zeros forever."""
        return cls(tuple(bits), (0,))

    def __getitem__(self, k: int) -> int:
        return pattern_at(self, k)

    def __str__(self) -> str:
        return "".join(map(str, self.prefix)) + ":" + "".join(map(str, self.tail))

    def unroll(self, length: int) -> Tuple[int, ...]:
        return tuple(pattern_at(self, k) for k in range(length))

    def drop(self, m: int) -> "Pattern":
        """The pattern ``k -> self[k + m]``."""
        if m <= len(self.prefix):
            return Pattern(self.prefix[m:], self.tail)
        r = (m - len(self.prefix)) % len(self.tail)
        return Pattern((), self.tail[r:] + self.tail[:r])


SINGLE_NEIGHBOR = Pattern((0, 1), (0,))
AT_MOST_SINGLE_NEIGHBOR = Pattern((1, 1), (0,))
BEST_SHOT = Pattern((1,), (0,))

NAMED_PATTERNS = {
    "sn": SINGLE_NEIGHBOR,
    "single-neighbor": SINGLE_NEIGHBOR,
    "amsn": AT_MOST_SINGLE_NEIGHBOR,
    "at-most-single-neighbor": AT_MOST_SINGLE_NEIGHBOR,
    "best-shot": BEST_SHOT,
    "bestshot": BEST_SHOT,
}


def pattern_at(pattern: Pattern, k: int) -> int:
    if k < 0:
        raise InputError(f"pattern index must be >= 0, got {k}")
    pre = pattern.prefix
    if k < len(pre):
        return pre[k]
    tail = pattern.tail
    return tail[(k - len(pre)) % len(tail)]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on nodes ``0..n-1`` with sorted adjacency lists."""

    n: int
    adjacency: Tuple[Tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise InputError("adjacency must have one entry per node")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise InputError(f"adjacency of {v} must be sorted and duplicate-free")
            for u in nbrs:
                if u == v:
                    raise InputError(f"self-loop at node {v}")
                if not 0 <= u < self.n:
                    raise InputError(f"neighbor {u} of {v} out of range")
                if v not in self.adjacency[u]:
                    raise InputError(f"edge ({v},{u}) is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build from an edge list, deduplicating and symmetrising. Self-loops raise."""
        if n < 0:
            raise InputError("node count must be >= 0")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at node {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, ())

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise InputError("a simple cycle needs at least 3 nodes")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def edges(self) -> list:
        """Canonical edge list: pairs ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        """Neighbourhood of each node as an int bitset."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adjacency)


def check_profile(graph: Graph, profile: Sequence[int]) -> Profile:
    bits = _as_bits(profile, "profile")
    if len(bits) != graph.n:
        raise InputError(f"profile has length {len(bits)}, graph has {graph.n} nodes")
    return bits


def profile_from_str(text: str) -> Profile:
    text = text.strip()
    if any(ch not in "01" for ch in text):
        raise InputError(f"profile must be a 0/1 string, got {text!r}")
    return tuple(int(ch) for ch in text)


def profile_to_str(profile: Sequence[int]) -> str:
    return "".join(str(int(b)) for b in profile)


@dataclass(frozen=True)
class PggInstance:
    graph: Graph
    pattern: Pattern


def supporter_count(graph: Graph, profile: Sequence[int], v: int) -> int:
    """Number of neighbours of ``v`` playing 1 (``v`` itself excluded)."""
    if not 0 <= v < graph.n:
        raise InputError(f"node {v} out of range for n={graph.n}")
    if len(profile) != graph.n:
        raise InputError(f"profile has length {len(profile)}, graph has {graph.n} nodes")
    return sum(profile[u] for u in graph.adjacency[v])


def deviating_nodes(instance: PggInstance, profile: Sequence[int]) -> list:
    """Nodes not playing their best response, ascending."""
    graph, pattern = instance.graph, instance.pattern
    bits = check_profile(graph, profile)
    out = []
    for v in range(graph.n):
        k = sum(bits[u] for u in graph.adjacency[v])
        if bits[v] != pattern_at(pattern, k):
            out.append(v)
    return out


def is_pne(instance: PggInstance, profile: Sequence[int]) -> bool:
    graph, pattern = instance.graph, instance.pattern
    bits = check_profile(graph, profile)
    for v in range(graph.n):
        k = sum(bits[u] for u in graph.adjacency[v])
        if bits[v] != pattern_at(pattern, k):
            return False
    return True


def is_ntpne(instance: PggInstance, profile: Sequence[int]) -> bool:
    return is_pne(instance, profile) and any(profile)


@dataclass(frozen=True)
class PatternClass:
    flat: bool
    sloped: bool
    sharp: bool
    monotone_increasing: bool
    monotone_decreasing: bool
    finite: bool
    max_one_index: Optional[int]

    @property
    def monotone(self) -> bool:
        return self.monotone_increasing or self.monotone_decreasing

    def flags(self) -> list:
        names = ["flat", "sloped", "sharp", "monotone_increasing", "monotone_decreasing", "finite"]
        return [name for name in names if getattr(self, name)]


def classify(pattern: Pattern) -> PatternClass:
    t0, t1 = pattern_at(pattern, 0), pattern_at(pattern, 1)
    window = pattern.unroll(len(pattern.prefix) + 2 * len(pattern.tail) + 1)
    inc = all(a <= b for a, b in zip(window, window[1:]))
    dec = all(a >= b for a, b in zip(window, window[1:]))
    finite = pattern.tail == (0,)
    max_one = None
    if finite and 1 in pattern.prefix:
        max_one = max(k for k, b in enumerate(pattern.prefix) if b)
    return PatternClass(
        flat=t0 == 0,
        sloped=t0 == 1 and t1 == 1,
        sharp=t0 == 1 and t1 == 0,
        monotone_increasing=inc,
        monotone_decreasing=dec,
        finite=finite,
        max_one_index=max_one,
    )


def shift_check(shifted: Pattern, base: Pattern, m: int, require_positive: bool = False) -> bool:
    """Whether ``shifted[k + m] == base[k]`` for all k (and ``shifted[k] == 1`` for
    ``k < m`` when ``require_positive``)."""
    if m < 0:
        raise InputError("shift must be >= 0")
    start = max(len(shifted.prefix) - m, len(base.prefix), 0)
    period = math.lcm(len(shifted.tail), len(base.tail))
    if any(pattern_at(shifted, k + m) != pattern_at(base, k) for k in range(start + period)):
        return False
    if require_positive and any(pattern_at(shifted, k) != 1 for k in range(m)):
        return False
    return True


def is_parity_pattern(pattern: Pattern) -> bool:
    """True when ``T[k]`` depends only on ``k mod 2``."""
    horizon = len(pattern.prefix) + 2 * len(pattern.tail) + 2
    return all(pattern_at(pattern, k) == pattern_at(pattern, k % 2) for k in range(horizon))
