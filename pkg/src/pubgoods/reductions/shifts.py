"""Constructions that move hardness between patterns.

* flat replication: ``N`` copies of every node, copies of adjacent nodes fully
  joined; carries Single-Neighbor to a flat finite pattern whose last 1 is at
  index ``N``.
* sloped family: antennas add ``m`` permanent supporters to every node and a
  force-1 gadget pins one chosen node to 1.
* sharp family: a node gadget adds exactly one supporter to every node and a
  force-1 gadget (whose bridge plays 0) pins one chosen node to 1.
* shift-2 gadget: a 4-cycle per node supplying two supporters.

Original nodes keep their ids ``0..n-1``; gadget nodes follow, grouped per
host node in ascending order.
"""

from __future__ import annotations

from typing import Callable, List, Tuple

from ..core import Graph, InputError, Pattern, PggInstance, classify, pattern_at, shift_check
from ..solvers.search import decide_ntpne
from .roles import ReductionMap, Role

Built = Tuple[Graph, ReductionMap]


def build_flat_replication(graph: Graph, copies: int) -> Built:
    """Replica ``k`` of ``v`` gets id ``k * n + v``."""
    if copies < 1:
        raise InputError("number of replicas must be >= 1")
    n = graph.n
    roles = [Role.of("Replica", original=v, replica=k) for k in range(copies) for v in range(n)]
    edges = [
        (k * n + u, l * n + v)
        for u, v in graph.edges()
        for k in range(copies)
        for l in range(copies)
    ]
    return Graph.from_edges(n * copies, edges), ReductionMap(tuple(roles))


def flat_parameters(pattern: Pattern) -> int:
    """Replica count for a flat, non-monotone, finite pattern: its last 1 index."""
    cls = classify(pattern)
    if not (cls.flat and not cls.monotone and cls.finite):
        raise InputError(f"pattern {pattern} is not flat, non-monotone and finite")
    return cls.max_one_index


def sloped_parameters(shifted: Pattern) -> Tuple[int, int, Pattern]:
    """``(m, m_prime, base)``: first zero, first 1 after it, and the base pattern
    ``k -> shifted[k + m]``."""
    cls = classify(shifted)
    if not (cls.sloped and not cls.monotone and cls.finite):
        raise InputError(f"pattern {shifted} is not sloped, non-monotone and finite")
    m = next(k for k in range(len(shifted.prefix) + 1) if pattern_at(shifted, k) == 0)
    m_prime = next(k for k in range(m + 1, len(shifted.prefix)) if pattern_at(shifted, k) == 1)
    return m, m_prime, shifted.drop(m)


def sharp_parameters(shifted: Pattern) -> Tuple[int, int, Pattern]:
    """``(m, N, base)`` where ``shifted = [1, 0..0, 1(at m), 1, ..., 1(at N), 0...]``."""
    cls = classify(shifted)
    if not (cls.sharp and cls.finite and cls.max_one_index is not None):
        raise InputError(f"pattern {shifted} is not sharp and finite")
    m = next((k for k in range(1, len(shifted.prefix)) if pattern_at(shifted, k) == 1), None)
    if m is None or m < 2 or pattern_at(shifted, m + 1) != 1:
        raise InputError(f"pattern {shifted} lacks a run '1,1' after its leading '1,0..0'")
    return m, cls.max_one_index, shifted.drop(1)


def shift2_base(shifted: Pattern) -> Pattern:
    cls = classify(shifted)
    base = shifted.drop(2)
    if not cls.sharp or pattern_at(base, 0) != 1:
        raise InputError(f"pattern {shifted} is not sharp with a non-flat base shifted by 2")
    return base


class _Builder:
    def __init__(self, graph: Graph):
        self.n = graph.n
        self.roles: List[Role] = [Role.of("Original", node=v) for v in range(graph.n)]
        self.edges: List[Tuple[int, int]] = list(graph.edges())

    def node(self, role: Role, *nbrs: int) -> int:
        v = len(self.roles)
        self.roles.append(role)
        self.edges.extend((v, u) for u in nbrs)
        return v

    def done(self) -> Built:
        return Graph.from_edges(len(self.roles), self.edges), ReductionMap(tuple(self.roles))


def _force_one_gadget(b: _Builder, host: int, width: int, fanout: int) -> None:
    """Bridge on ``host``, ``width`` layer-2 nodes on the bridge, ``fanout``
    private layer-3 leaves under each layer-2 node."""
    bridge = b.node(Role.of("FgBridge", host=host), host)
    for j in range(width):
        mid = b.node(Role.of("FgLayer2", host=host, index=j), bridge)
        for _ in range(fanout):
            b.node(Role.of("FgLayer3", host=host, parent=mid), mid)


def build_sloped_member(graph: Graph, shifted: Pattern, target: int) -> Built:
    m, m_prime, _ = sloped_parameters(shifted)
    if not 0 <= target < graph.n:
        raise InputError(f"node {target} out of range")
    b = _Builder(graph)
    for v in range(graph.n):
        for _ in range(m - 1 if v == target else m):
            b.node(Role.of("Antenna", host=v), v)
    _force_one_gadget(b, target, m_prime - 1, m_prime - 1)
    return b.done()


def build_sloped_family(graph: Graph, shifted: Pattern) -> List[Built]:
    sloped_parameters(shifted)
    return [build_sloped_member(graph, shifted, i) for i in range(graph.n)]


def build_sharp_member(graph: Graph, shifted: Pattern, target: int) -> Built:
    m, top, _ = sharp_parameters(shifted)
    if not 0 <= target < graph.n:
        raise InputError(f"node {target} out of range")
    b = _Builder(graph)
    for v in range(graph.n):
        bridge = b.node(Role.of("NgBridge", host=v), v)
        clique = [bridge]
        for _ in range(m):
            clique.append(b.node(Role.of("NgClique", host=v), *clique))
        for _ in range(m - 1):
            b.node(Role.of("Antenna", host=bridge), bridge)
    _force_one_gadget(b, target, top, m)
    return b.done()


def build_sharp_family(graph: Graph, shifted: Pattern) -> List[Built]:
    sharp_parameters(shifted)
    return [build_sharp_member(graph, shifted, i) for i in range(graph.n)]


def build_shift2_gadget_graph(graph: Graph, shifted: Pattern = None) -> Built:
    """Attach a 4-cycle ``a-b-c-d`` to every node ``v`` with ``v`` joined to ``a, b``.

    When ``shifted`` is given it is validated as a sharp pattern shifted by 2
    from a non-flat base.
    """
    if shifted is not None:
        shift2_base(shifted)
    b = _Builder(graph)
    for v in range(graph.n):
        a = b.node(Role.of("NgCycle", host=v, label="a"), v)
        bb = b.node(Role.of("NgCycle", host=v, label="b"), v, a)
        c = b.node(Role.of("NgCycle", host=v, label="c"), bb)
        b.node(Role.of("NgCycle", host=v, label="d"), c, a)
    return b.done()


FAMILY_KINDS = ("sloped", "sharp")


def family_base(shifted: Pattern, kind: str) -> Pattern:
    if kind == "sloped":
        return sloped_parameters(shifted)[2]
    if kind == "sharp":
        return sharp_parameters(shifted)[2]
    raise InputError(f"family kind must be one of {FAMILY_KINDS}, got {kind!r}")


def build_family(graph: Graph, shifted: Pattern, kind: str) -> List[Built]:
    builder: Callable = {"sloped": build_sloped_family, "sharp": build_sharp_family}.get(kind)
    if builder is None:
        raise InputError(f"family kind must be one of {FAMILY_KINDS}, got {kind!r}")
    return builder(graph, shifted)


def turing_decide_via_family(base: PggInstance, shifted: Pattern, kind: str, workers: int = 1) -> bool:
    """Decide the base instance by asking the shifted-pattern oracle about each
    family member; true iff some member has a non-trivial equilibrium."""
    shift = sloped_parameters(shifted)[0] if kind == "sloped" else 1
    family_base(shifted, kind)
    if not shift_check(shifted, base.pattern, shift, require_positive=True):
        raise InputError(f"base pattern {base.pattern} is not {shifted} shifted down by {shift}")
    for graph, _ in build_family(base.graph, shifted, kind):
        if decide_ntpne(PggInstance(graph, shifted), workers=workers).exists:
            return True
    return False
