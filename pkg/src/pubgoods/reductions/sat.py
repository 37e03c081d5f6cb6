"""ONE-IN-THREE 3SAT to Single-Neighbor equilibria.

Every clause becomes a 9-node clause gadget: literal nodes ``l1 l2 l3`` (a
triangle), inner nodes ``a b c`` (a triangle) and peripheral nodes ``x y z``
(independent). Each literal sees every peripheral, and literal ``i`` and
peripheral ``i`` share inner node ``i`` as their only inner neighbour.

Connectors touch literal nodes only:

* transfer node: adjacent to the six literal nodes of two gadgets,
* copy node: adjacent to two occurrences of the same literal,
* negation node: adjacent to one occurrence of ``x`` and to the two other
  literals of the clause holding one occurrence of ``not x``.

Node ids: gadget ``c`` occupies ``9c .. 9c+8`` (literals, inner, peripheral),
then transfer, copy and negation nodes in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from ..core import SINGLE_NEIGHBOR, Graph, InputError, PggInstance, Profile, check_profile, is_ntpne
from .roles import ReductionMap, Role

MODES = ("pairwise", "chain")

Assignment = Tuple[bool, ...]


class Literal(NamedTuple):
    var: int
    positive: bool

    @classmethod
    def from_dimacs(cls, lit: int) -> "Literal":
        if lit == 0:
            raise InputError("0 is not a literal")
        return cls(abs(lit) - 1, lit > 0)

    @property
    def dimacs(self) -> int:
        return (self.var + 1) * (1 if self.positive else -1)

    def value(self, assignment: Sequence[bool]) -> bool:
        return bool(assignment[self.var]) == self.positive


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: Tuple[Tuple[Literal, Literal, Literal], ...]

    def __post_init__(self) -> None:
        clauses = []
        for idx, clause in enumerate(self.clauses):
            clause = tuple(Literal(int(l[0]), bool(l[1])) for l in clause)
            if len(clause) != 3:
                raise InputError(f"clause {idx} has {len(clause)} literals, need exactly 3")
            vars_ = [l.var for l in clause]
            for l in clause:
                if not 0 <= l.var < self.num_vars:
                    raise InputError(f"clause {idx}: variable {l.var + 1} out of range")
            if len(set(vars_)) != 3:
                if len(set(clause)) != 3:
                    raise InputError(f"clause {idx} repeats a literal")
                raise InputError(f"clause {idx} holds a variable together with its negation")
            clauses.append(clause)
        object.__setattr__(self, "clauses", tuple(clauses))

    @classmethod
    def from_dimacs(cls, num_vars: int, clauses: Sequence[Sequence[int]]) -> "CnfFormula":
        return cls(num_vars, tuple(tuple(Literal.from_dimacs(x) for x in c) for c in clauses))

    def dimacs_clauses(self) -> List[List[int]]:
        return [[l.dimacs for l in c] for c in self.clauses]

    def occurring_vars(self) -> List[int]:
        return sorted({l.var for c in self.clauses for l in c})


def one_in_three_satisfies(cnf: CnfFormula, assignment: Sequence[bool]) -> bool:
    if len(assignment) != cnf.num_vars:
        return False
    return all(sum(l.value(assignment) for l in c) == 1 for c in cnf.clauses)


def sat_brute_force(cnf: CnfFormula) -> Optional[Assignment]:
    """Smallest one-in-three solution in counting order (variable 1 is the least
    significant bit), or None.

    Variables are fixed from the highest index down, False first, so the first
    complete solution found is the numerically smallest.
    """
    n = cnf.num_vars
    value: List[Optional[bool]] = [None] * n
    by_var: List[List[int]] = [[] for _ in range(n)]
    for ci, clause in enumerate(cnf.clauses):
        for l in clause:
            by_var[l.var].append(ci)

    def clause_ok(ci: int) -> bool:
        trues = unknown = 0
        for l in cnf.clauses[ci]:
            v = value[l.var]
            if v is None:
                unknown += 1
            elif v == l.positive:
                trues += 1
        return trues <= 1 and (unknown > 0 or trues == 1)

    def dfs(v: int) -> bool:
        if v < 0:
            return True
        for b in (False, True):
            value[v] = b
            if all(clause_ok(ci) for ci in by_var[v]) and dfs(v - 1):
                return True
        value[v] = None
        return False

    if dfs(n - 1):
        return tuple(bool(b) for b in value)
    return None


def _occurrences(cnf: CnfFormula) -> Dict[Literal, List[Tuple[int, int]]]:
    occ: Dict[Literal, List[Tuple[int, int]]] = {}
    for ci, clause in enumerate(cnf.clauses):
        for pos, lit in enumerate(clause):
            occ.setdefault(lit, []).append((ci, pos))
    return occ


def literal_node(clause: int, position: int) -> int:
    return 9 * clause + position


def clause_gadget_edges(base: int) -> List[Tuple[int, int]]:
    """Edges of a clause gadget on nodes ``base .. base + 8``."""
    lits, inner, peri = range(base, base + 3), range(base + 3, base + 6), range(base + 6, base + 9)
    edges = list(combinations(lits, 2)) + list(combinations(inner, 2))
    edges += [(l, p) for l in lits for p in peri]
    edges += [(lits[i], inner[i]) for i in range(3)]
    edges += [(peri[i], inner[i]) for i in range(3)]
    return edges


def build_sat_reduction(cnf: CnfFormula, mode: str = "chain") -> Tuple[Graph, ReductionMap]:
    """Single-Neighbor graph whose NTPNEs correspond to one-in-three solutions."""
    if mode not in MODES:
        raise InputError(f"mode must be one of {MODES}, got {mode!r}")
    roles: List[Role] = []
    edges: List[Tuple[int, int]] = []
    for ci, clause in enumerate(cnf.clauses):
        base = 9 * ci
        for pos, lit in enumerate(clause):
            roles.append(
                Role.of("Literal", clause=ci, position=pos, var=lit.var, positive=int(lit.positive), dimacs=lit.dimacs)
            )
        for pos in range(3):
            roles.append(Role.of("Inner", clause=ci, position=pos))
        for pos in range(3):
            roles.append(Role.of("Peripheral", clause=ci, position=pos))
        edges += clause_gadget_edges(base)

    def add(role: Role, nbrs: Sequence[int]) -> None:
        node = len(roles)
        roles.append(role)
        edges.extend((node, u) for u in nbrs)

    k = len(cnf.clauses)
    clause_pairs = combinations(range(k), 2) if mode == "pairwise" else zip(range(k - 1), range(1, k))
    for c1, c2 in clause_pairs:
        add(Role.of("Transfer", left=c1, right=c2), [literal_node(c, p) for c in (c1, c2) for p in range(3)])

    occ = _occurrences(cnf)
    for lit in sorted(occ, key=lambda l: (l.var, not l.positive)):
        places = occ[lit]
        pairs = combinations(places, 2) if mode == "pairwise" else zip(places, places[1:])
        for (c1, p1), (c2, p2) in pairs:
            a, b = literal_node(c1, p1), literal_node(c2, p2)
            add(Role.of("Copy", var=lit.var, positive=int(lit.positive), left=a, right=b), [a, b])

    for var in range(cnf.num_vars):
        pos_occ, neg_occ = occ.get(Literal(var, True)), occ.get(Literal(var, False))
        if not pos_occ or not neg_occ:
            continue
        (cp, pp), (cn, pn) = pos_occ[0], neg_occ[0]
        if cp == cn:
            raise InputError(f"variable {var + 1} and its negation first occur in the same clause")
        others = [literal_node(cn, p) for p in range(3) if p != pn]
        add(
            Role.of("Negation", var=var, positive_node=literal_node(cp, pp), negative_node=literal_node(cn, pn)),
            [literal_node(cp, pp)] + others,
        )
    return Graph.from_edges(len(roles), edges), ReductionMap(tuple(roles))


def reduction_instance(cnf: CnfFormula, mode: str = "chain") -> Tuple[PggInstance, ReductionMap]:
    graph, rmap = build_sat_reduction(cnf, mode)
    return PggInstance(graph, SINGLE_NEIGHBOR), rmap


def graph_for_map(cnf: CnfFormula, rmap: ReductionMap) -> Graph:
    """Rebuild the reduction graph a map was produced with (mode is inferred)."""
    for mode in MODES:
        graph, built = build_sat_reduction(cnf, mode)
        if built == rmap:
            return graph
    raise InputError("map does not match the reduction of this formula in any mode")


def encode_assignment(cnf: CnfFormula, rmap: ReductionMap, assignment: Sequence[bool]) -> Profile:
    """The equilibrium matching a one-in-three solution: per gadget the true
    literal, its paired peripheral and the two other inner nodes play 1."""
    if not one_in_three_satisfies(cnf, assignment):
        raise InputError("assignment does not one-in-three satisfy the formula")
    bits = [0] * len(rmap)
    for ci, clause in enumerate(cnf.clauses):
        pos = next(p for p, l in enumerate(clause) if l.value(assignment))
        bits[9 * ci + pos] = 1
        bits[9 * ci + 6 + pos] = 1
        for other in range(3):
            if other != pos:
                bits[9 * ci + 3 + other] = 1
    return tuple(bits)


def decode_profile(
    cnf: CnfFormula, rmap: ReductionMap, profile: Sequence[int], graph: Optional[Graph] = None
) -> Assignment:
    """Read an assignment off an equilibrium: a literal node at 1 makes its literal
    true, at 0 false. Variables not in the formula decode to False."""
    if graph is None:
        graph = graph_for_map(cnf, rmap)
    bits = check_profile(graph, profile)
    if not is_ntpne(PggInstance(graph, SINGLE_NEIGHBOR), bits):
        raise InputError("profile is not a non-trivial equilibrium of the reduction graph")
    value: List[Optional[bool]] = [None] * cnf.num_vars
    for node in rmap.nodes("Literal"):
        r = rmap[node]
        v = bool(bits[node]) == bool(r["positive"])
        if value[r["var"]] is not None and value[r["var"]] != v:
            raise RuntimeError(f"literal nodes disagree on variable {r['var'] + 1}")
        value[r["var"]] = v
    return tuple(bool(v) for v in value)
