"""Exhaustive checks of the structural claims behind the reductions.

Each check enumerates every PNE (the trivial one included) of small graphs and
asserts a claim on each. Results are collected in :class:`LemmaReport` objects,
one per claim id.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..core import SINGLE_NEIGHBOR, Graph, Pattern, PggInstance, Profile, is_ntpne, pattern_at
from ..reductions.sat import (
    MODES,
    CnfFormula,
    build_sat_reduction,
    clause_gadget_edges,
    decode_profile,
    encode_assignment,
    one_in_three_satisfies,
    sat_brute_force,
)
from ..reductions.shifts import (
    build_flat_replication,
    build_sharp_member,
    build_shift2_gadget_graph,
    build_sloped_member,
    family_base,
    flat_parameters,
    shift2_base,
    turing_decide_via_family,
)
from ..solvers.search import decide_ntpne, enumerate_ntpne, enumerate_pne
from .generators import FIXED_CNFS, all_graphs, cnf_corpus


@dataclass
class LemmaReport:
    lemma_id: str
    checked: int = 0
    counterexamples: List[Tuple[Graph, Optional[Profile]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def line(self) -> str:
        return f"{self.lemma_id} {self.checked} {'PASS' if self.passed else 'FAIL'}"


class _Reports:
    def __init__(self) -> None:
        self.by_id: Dict[str, LemmaReport] = {}

    def record(self, lemma_id: str, ok: bool, graph: Graph, profile: Optional[Profile] = None) -> None:
        rep = self.by_id.setdefault(lemma_id, LemmaReport(lemma_id))
        rep.checked += 1
        if not ok:
            rep.counterexamples.append((graph, profile))

    def touch(self, lemma_id: str) -> None:
        self.by_id.setdefault(lemma_id, LemmaReport(lemma_id))

    def sorted(self) -> List[LemmaReport]:
        return [self.by_id[k] for k in sorted(self.by_id)]


# -- structure laws ---------------------------------------------------------


def check_structure_laws(
    n_max: int = 15,
    paths: Optional[Iterable[int]] = None,
    cycles: Optional[Iterable[int]] = None,
    cliques: Optional[Iterable[int]] = None,
) -> List[LemmaReport]:
    """Single-Neighbor on paths (NTPNE iff n = 2 mod 3), cycles (iff n = 0 mod 3)
    and cliques (always)."""
    if n_max > 15:
        raise ValueError("structure laws are checked up to n = 15")
    reports = _Reports()
    families = [
        ("STRUCT-path", Graph.path, paths or range(2, n_max + 1), lambda n: n % 3 == 2),
        ("STRUCT-cycle", Graph.cycle, cycles or range(3, n_max + 1), lambda n: n % 3 == 0),
        ("STRUCT-clique", Graph.complete, cliques or range(2, n_max + 1), lambda n: True),
    ]
    for lemma_id, make, sizes, law in families:
        for n in sizes:
            g = make(n)
            res = decide_ntpne(PggInstance(g, SINGLE_NEIGHBOR))
            ok = res.exists == law(n) and (res.witness is None or is_ntpne(PggInstance(g, SINGLE_NEIGHBOR), res.witness))
            reports.record(lemma_id, ok, g, res.witness)
    return reports.sorted()


# -- clause gadget compositions ---------------------------------------------


@dataclass
class Composition:
    """Clause gadgets (bases ``9c``) plus connector and host nodes."""

    name: str
    graph: Graph
    gadgets: List[int]
    transfers: List[int] = field(default_factory=list)
    copies: List[Tuple[int, int, int]] = field(default_factory=list)
    negations: List[Tuple[int, int, int]] = field(default_factory=list)
    hosts: List[int] = field(default_factory=list)


def compose(
    name: str,
    num_gadgets: int,
    transfer: bool = False,
    copy: Optional[Tuple[int, int]] = None,
    negation: Optional[Tuple[int, int]] = None,
    host_links: Sequence[Sequence[int]] = (),
    host_edge: bool = False,
) -> Composition:
    """Build ``num_gadgets`` clause gadgets joined by the requested connectors.

    ``copy=(p, q)`` links literal ``p`` of gadget 0 with literal ``q`` of gadget 1.
    ``negation=(p, q)`` treats literal ``p`` of gadget 0 as ``x`` and literal ``q``
    of gadget 1 as ``not x``. Each entry of ``host_links`` is one extra node
    attached to the given literal nodes.
    """
    edges: List[Tuple[int, int]] = []
    for g in range(num_gadgets):
        edges += clause_gadget_edges(9 * g)
    nxt = 9 * num_gadgets
    comp = Composition(name, Graph.empty(0), [9 * g for g in range(num_gadgets)])
    if transfer:
        for g1, g2 in combinations(range(num_gadgets), 2):
            edges += [(nxt, 9 * g + p) for g in (g1, g2) for p in range(3)]
            comp.transfers.append(nxt)
            nxt += 1
    if copy is not None:
        a, b = copy[0], 9 + copy[1]
        edges += [(nxt, a), (nxt, b)]
        comp.copies.append((nxt, a, b))
        nxt += 1
    if negation is not None:
        l1, l1n = negation[0], 9 + negation[1]
        others = [9 + p for p in range(3) if 9 + p != l1n]
        edges += [(nxt, l1)] + [(nxt, o) for o in others]
        comp.negations.append((nxt, l1, l1n))
        nxt += 1
    for links in host_links:
        edges += [(nxt, u) for u in links]
        comp.hosts.append(nxt)
        nxt += 1
    if host_edge and len(comp.hosts) >= 2:
        edges.append((comp.hosts[0], comp.hosts[1]))
    comp.graph = Graph.from_edges(nxt, edges)
    return comp


def _gadget_checks(reports: _Reports, comp: Composition, s: Profile) -> None:
    g = comp.graph
    active = []
    for base in comp.gadgets:
        lits = [s[base + i] for i in range(3)]
        inner = [s[base + 3 + i] for i in range(3)]
        peri = [s[base + 6 + i] for i in range(3)]
        on = any(lits + inner + peri)
        active.append(on)
        reports.record("L01", not on or any(lits), g, s)
        reports.record("L02", sum(lits) <= 1, g, s)
        reports.record("L03", all(peri[i] for i in range(3) if lits[i]), g, s)
        if on:
            ok = sum(lits) == 1
            if ok:
                p = lits.index(1)
                want = [int(i == p) for i in range(3)] + [int(i != p) for i in range(3)] + [int(i == p) for i in range(3)]
                ok = lits + inner + peri == want
            reports.record("L04", ok, g, s)
    for t in comp.transfers:
        reports.record("L05", s[t] == 0, g, s)
    if comp.transfers:
        reports.record("L06", not any(active) or all(active), g, s)
    for k, a, b in comp.copies:
        reports.record("L07", s[k] == 0, g, s)
        reports.record("L08", s[a] == s[b], g, s)
    for node, l1, l1n in comp.negations:
        reports.record("L09", s[node] == 0, g, s)
        if active[0] and active[1]:
            reports.record("L10", s[l1] != s[l1n], g, s)


@dataclass(frozen=True)
class HostSample:
    """How host nodes are attached to literal nodes of the compositions.

    ``samples=None`` enumerates every attachment of up to ``max_extras`` hosts.
    """

    max_extras: int = 2
    samples: Optional[int] = 400
    seed: int = 7


def _host_configs(num_literals: int, sample: HostSample, exhaustive: bool):
    subsets = [
        [u for u in range(num_literals) if mask >> u & 1] for mask in range(1, 1 << num_literals)
    ]
    yield (), False
    if sample.max_extras < 1:
        return
    if exhaustive or sample.samples is None:
        for s1 in subsets:
            yield (s1,), False
        if sample.max_extras >= 2:
            # the two hosts are interchangeable, so unordered pairs suffice
            for i, j in combinations_with_replacement(range(len(subsets)), 2):
                yield (subsets[i], subsets[j]), False
                yield (subsets[i], subsets[j]), True
        return
    rng = random.Random(sample.seed)
    for _ in range(sample.samples):
        extras = rng.randint(1, sample.max_extras)
        links = tuple(rng.choice(subsets) for _ in range(extras))
        yield links, extras == 2 and rng.random() < 0.5


def _literal_ids(num_gadgets: int) -> List[int]:
    return [9 * g + p for g in range(num_gadgets) for p in range(3)]


def gadget_compositions(sample: HostSample = HostSample()) -> List[Composition]:
    """Standalone gadget (hosts enumerated exhaustively) and two-gadget
    compositions with transfer, copy and negation nodes (hosts sampled)."""
    out = []
    lits1 = _literal_ids(1)
    for links, edge in _host_configs(3, sample, exhaustive=True):
        out.append(compose("gadget", 1, host_links=[[lits1[i] for i in l] for l in links], host_edge=edge))
    lits2 = _literal_ids(2)
    shapes = [("transfer", dict(transfer=True))]
    for p, q in [(0, 0), (1, 2)]:
        shapes.append((f"copy{p}{q}", dict(copy=(p, q))))
        shapes.append((f"transfer+copy{p}{q}", dict(transfer=True, copy=(p, q))))
        shapes.append((f"transfer+negation{p}{q}", dict(transfer=True, negation=(p, q))))
    for name, kw in shapes:
        for links, edge in _host_configs(6, sample, exhaustive=False):
            out.append(compose(name, 2, host_links=[[lits2[i] for i in l] for l in links], host_edge=edge, **kw))
    return out


def lemma11_formulas() -> List[CnfFormula]:
    return [CnfFormula.from_dimacs(n, cl) for n, cl in FIXED_CNFS if len(cl) <= 3]


def check_gadget_lemmas(sample: HostSample = HostSample(), workers: int = 1) -> List[LemmaReport]:
    """Claims L01-L10 on every PNE of the compositions, L11 on every NTPNE of
    full reduction graphs."""
    reports = _Reports()
    for comp in gadget_compositions(sample):
        for s in enumerate_pne(PggInstance(comp.graph, SINGLE_NEIGHBOR), workers=workers):
            _gadget_checks(reports, comp, s)
    for cnf in lemma11_formulas():
        for mode in MODES:
            graph, rmap = build_sat_reduction(cnf, mode)
            gadgets = [9 * c for c in range(len(cnf.clauses))]
            for s in enumerate_ntpne(PggInstance(graph, SINGLE_NEIGHBOR), workers=workers):
                ok = all(any(s[b : b + 9]) for b in gadgets)
                connectors = rmap.nodes("Transfer") + rmap.nodes("Copy") + rmap.nodes("Negation")
                reports.record("L11", ok and not any(s[c] for c in connectors), graph, s)
    for lemma_id in [f"L{i:02d}" for i in range(1, 11)] + ["L11"]:
        reports.touch(lemma_id)
    return reports.sorted()


# -- force-1, node and shift-2 gadgets ------------------------------------

SLOPED_PATTERNS = [Pattern.parse("1101:0"), Pattern.parse("11001:0"), Pattern.parse("11101:0")]
SHARP_PATTERNS = [Pattern.parse("1011:0"), Pattern.parse("10011:0"), Pattern.parse("10111:0")]
SHIFT2_PATTERNS = [Pattern.parse("1011:0"), Pattern.parse("1010:0"), Pattern.parse("101101:0")]


def host_graphs(max_extras: int = 2) -> List[Graph]:
    """Node 0 plus up to ``max_extras`` extra nodes, each graph connected through 0."""
    out = [Graph.empty(1)]
    if max_extras >= 1:
        out.append(Graph.path(2))
    if max_extras >= 2:
        out += [Graph.star(2), Graph.complete(3), Graph.from_edges(3, [(0, 1), (1, 2)])]
    return out


def check_appendix_gadgets(
    sloped: Sequence[Pattern] = tuple(SLOPED_PATTERNS),
    sharp: Sequence[Pattern] = tuple(SHARP_PATTERNS),
    shift2: Sequence[Pattern] = tuple(SHIFT2_PATTERNS),
    max_extras: int = 2,
) -> List[LemmaReport]:
    """Forced values in the force-1 gadgets and node gadgets, on every PNE of the
    gadgets attached to node 0 of small host graphs."""
    reports = _Reports()
    hosts = host_graphs(max_extras)
    for pat in sloped:
        for h in hosts:
            g, rmap = build_sloped_member(h, pat, 0)
            fg = rmap.nodes("FgBridge") + rmap.nodes("FgLayer2") + rmap.nodes("FgLayer3")
            for s in enumerate_pne(PggInstance(g, pat)):
                reports.record("FG-sloped-force-one", s[0] == 1 and all(s[v] for v in fg), g, s)
    for pat in sharp:
        for h in hosts:
            g, rmap = build_sharp_member(h, pat, 0)
            for s in enumerate_pne(PggInstance(g, pat)):
                reports.record("NG-bridge", all(s[v] for v in rmap.nodes("NgBridge")), g, s)
                ok = (
                    s[0] == 1
                    and s[rmap.nodes("FgBridge")[0]] == 0
                    and all(s[v] for v in rmap.nodes("FgLayer2"))
                    and not any(s[v] for v in rmap.nodes("FgLayer3"))
                )
                reports.record("FG-sharp-force-one", ok, g, s)
        # with the bridge at 1, clique at 1 and antennas at 0 every gadget node is happy
        g, rmap = build_sharp_member(Graph.empty(1), pat, 0)
        for v0 in (0, 1):
            s = [0] * g.n
            s[0] = v0
            for v in rmap.nodes("NgBridge") + rmap.nodes("NgClique"):
                s[v] = 1
            gadget = rmap.nodes("NgBridge") + rmap.nodes("NgClique") + rmap.nodes("Antenna")
            ok = _happy(PggInstance(g, pat), s, gadget)
            reports.record("NG-exists", ok, g, tuple(s))
    for pat in shift2:
        shift2_base(pat)
        for h in hosts:
            g, rmap = build_shift2_gadget_graph(h, pat)
            for s in enumerate_pne(PggInstance(g, pat)):
                ok = True
                for v in range(h.n):
                    a, b, c, d = rmap.nodes("NgCycle", host=v)
                    ok &= s[a] == s[b] == 1 and s[c] == s[d]
                reports.record("SHIFT2-cycle", ok, g, s)
        g, rmap = build_shift2_gadget_graph(Graph.empty(1), pat)
        for v0 in (0, 1):
            s = (v0, 1, 1, 1 - v0, 1 - v0)
            reports.record("SHIFT2-exists", _happy(PggInstance(g, pat), s, [1, 2, 3, 4]), g, s)
    return reports.sorted()


def _happy(instance: PggInstance, s: Sequence[int], nodes: Iterable[int]) -> bool:
    adj = instance.graph.adjacency
    return all(s[v] == pattern_at(instance.pattern, sum(s[u] for u in adj[v])) for v in nodes)


# -- reduction equivalence --------------------------------------------------


def check_reduction_equivalence(corpus: Sequence[CnfFormula], mode: str) -> LemmaReport:
    """One-in-three satisfiable iff the reduction graph has an NTPNE; every
    witness decodes to a solution and every solution encodes to an NTPNE."""
    rep = LemmaReport(f"EQUIV-{mode}")
    for cnf in corpus:
        graph, rmap = build_sat_reduction(cnf, mode)
        inst = PggInstance(graph, SINGLE_NEIGHBOR)
        sol = sat_brute_force(cnf)
        res = decide_ntpne(inst)
        ok = res.exists == (sol is not None)
        if ok and res.witness is not None:
            ok = one_in_three_satisfies(cnf, decode_profile(cnf, rmap, res.witness, graph))
        if ok and sol is not None:
            ok = is_ntpne(inst, encode_assignment(cnf, rmap, sol))
        rep.checked += 1
        if not ok:
            rep.counterexamples.append((graph, res.witness))
    return rep


def check_degree_bound(corpus: Sequence[CnfFormula], bound: int = 13) -> LemmaReport:
    rep = LemmaReport("DEGREE-chain")
    for cnf in corpus:
        graph, _ = build_sat_reduction(cnf, "chain")
        rep.checked += 1
        if graph.max_degree() > bound:
            rep.counterexamples.append((graph, None))
    return rep


# -- pattern-shift equivalences ---------------------------------------------


def _graphs_upto(n_max: int) -> Iterable[Graph]:
    for n in range(1, n_max + 1):
        yield from all_graphs(n)


def check_flat_replication(pattern: Pattern = Pattern.parse("001:0"), n_max: int = 5) -> LemmaReport:
    """NTPNE under ``pattern`` on the replicated graph iff NTPNE under
    Single-Neighbor on the original, plus replica synchrony in every PNE."""
    copies = flat_parameters(pattern)
    rep = LemmaReport(f"EQUIV-flat-{pattern}")
    for g in _graphs_upto(n_max):
        big, _ = build_flat_replication(g, copies)
        target = decide_ntpne(PggInstance(big, pattern))
        base = decide_ntpne(PggInstance(g, SINGLE_NEIGHBOR))
        ok = target.exists == base.exists
        if ok and target.witness is not None:
            w = target.witness
            ok = all(w[k * g.n + v] == w[v] for k in range(copies) for v in range(g.n))
        rep.checked += 1
        if not ok:
            rep.counterexamples.append((g, target.witness))
    return rep


def check_family_equivalence(shifted: Pattern, kind: str, n_max: int = 4) -> LemmaReport:
    base = family_base(shifted, kind)
    rep = LemmaReport(f"EQUIV-{kind}-{shifted}")
    for g in _graphs_upto(n_max):
        inst = PggInstance(g, base)
        rep.checked += 1
        if turing_decide_via_family(inst, shifted, kind) != decide_ntpne(inst).exists:
            rep.counterexamples.append((g, None))
    return rep


def check_shift2_equivalence(shifted: Pattern, n_max: int = 5) -> LemmaReport:
    base = shift2_base(shifted)
    rep = LemmaReport(f"EQUIV-shift2-{shifted}")
    for g in _graphs_upto(n_max):
        big, _ = build_shift2_gadget_graph(g, shifted)
        rep.checked += 1
        if decide_ntpne(PggInstance(big, shifted)).exists != decide_ntpne(PggInstance(g, base)).exists:
            rep.counterexamples.append((g, None))
    return rep


def check_shift_equivalences(flat_n: int = 5, family_n: int = 4, shift2_n: int = 5) -> List[LemmaReport]:
    reports = [check_flat_replication(Pattern.parse("001:0"), flat_n)]
    reports += [check_family_equivalence(p, "sloped", family_n) for p in SLOPED_PATTERNS[:1]]
    reports += [check_family_equivalence(p, "sharp", family_n) for p in SHARP_PATTERNS[:1]]
    reports += [check_shift2_equivalence(p, shift2_n) for p in SHIFT2_PATTERNS]
    return reports


# -- suites -----------------------------------------------------------------

SUITES = ("structure", "gadgets", "appendix", "reduction", "all")


def run_suite(name: str = "all", workers: int = 1) -> List[LemmaReport]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    reports: List[LemmaReport] = []
    if name in ("structure", "all"):
        reports += check_structure_laws(15, paths=range(2, 15), cycles=range(3, 16), cliques=range(2, 11))
    if name in ("gadgets", "all"):
        reports += check_gadget_lemmas(workers=workers)
    if name in ("appendix", "all"):
        reports += check_appendix_gadgets()
        reports += check_shift_equivalences()
    if name in ("reduction", "all"):
        corpus = cnf_corpus()
        reports += [check_reduction_equivalence(corpus, mode) for mode in MODES]
        reports.append(check_degree_bound(corpus))
    return reports


def format_reports(reports: Iterable[LemmaReport]) -> str:
    return "\n".join(r.line() for r in reports)
