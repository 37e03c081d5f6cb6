"""Acceptance gate: one PASS/FAIL line per criterion, each under its time budget.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script.
"""

from __future__ import annotations

import random
import time

import pytest

from pubgoods.core import AT_MOST_SINGLE_NEIGHBOR, SINGLE_NEIGHBOR, Pattern, PggInstance, is_ntpne, is_pne
from pubgoods.reductions import MODES, build_sat_reduction
from pubgoods.solvers import (
    amsn_algorithm1,
    amsn_algorithm2_trace,
    enumerate_ntpne,
    is_maximal_independent,
    parity_solve,
)
from pubgoods.verification import (
    HostSample,
    brute_force_pne,
    check_degree_bound,
    check_gadget_lemmas,
    check_reduction_equivalence,
    check_shift_equivalences,
    check_structure_laws,
    cnf_corpus,
    gadget_compositions,
    random_graph,
)
from pubgoods.verification.lemmas import lemma11_formulas


def _summary(reports):
    failed = [r.lemma_id for r in reports if not r.passed]
    checked = sum(r.checked for r in reports)
    return not failed, f"{len(reports)} reports, {checked} checks" + (f", failed {failed}" if failed else "")


def structure_laws():
    return _summary(check_structure_laws(15, paths=range(2, 15), cycles=range(3, 16), cliques=range(2, 11)))


def reduction_equivalence():
    corpus = cnf_corpus()
    ok, detail = _summary([check_reduction_equivalence(corpus, mode) for mode in MODES])
    return ok and len(corpus) >= 200, f"{len(corpus)} formulas; {detail}"


def lemma_suite():
    sample = HostSample(max_extras=2, samples=None)
    largest = max(c.graph.n for c in gadget_compositions(sample))
    ok, detail = _summary(check_gadget_lemmas(sample))
    return ok and largest <= 26, f"largest composition {largest} nodes; {detail}"


def degree_bound():
    corpus = cnf_corpus()
    worst = max(build_sat_reduction(f, "chain")[0].max_degree() for f in corpus)
    return check_degree_bound(corpus, 13).passed, f"max chain degree {worst} <= 13"


def amsn_repair_loop():
    probs = (0.02, 0.1, 0.5)
    rng = random.Random(2022)
    worst = 0
    for i in range(500):
        n, p = rng.randint(1, 200), probs[i % 3]
        g = random_graph(n, p, seed=i)
        run = amsn_algorithm2_trace(g, check_invariants=True)
        if not is_ntpne(PggInstance(g, AT_MOST_SINGLE_NEIGHBOR), run.profile) or run.iterations > g.n:
            return False, f"graph {i} (n={n}, p={p})"
        if not all(is_maximal_independent(g, s) for s in run.seed_history):
            return False, f"invariant broken on graph {i}"
        worst = max(worst, run.iterations)
    return True, f"500 graphs, max iterations {worst}"


def amsn_algorithm1_oracle():
    rng = random.Random(7)
    for i in range(200):
        g = random_graph(rng.randint(1, 7), rng.random(), seed=1000 + i)
        if not is_ntpne(PggInstance(g, AT_MOST_SINGLE_NEIGHBOR), amsn_algorithm1(g)):
            return False, f"graph {i}: {g.edges()}"
    return True, "200 graphs"


def parity_oracle():
    rng = random.Random(11)
    patterns = [Pattern.parse(":10"), Pattern.parse(":01")]
    exists = 0
    for i in range(100):
        g = random_graph(rng.randint(1, 12), rng.random(), seed=2000 + i)
        p = patterns[i % 2]
        res = parity_solve(g, p)
        truth = bool(brute_force_pne(PggInstance(g, p), nontrivial=True))
        if res.exists != truth or (res.exists and not (is_pne(PggInstance(g, p), res.witness) and any(res.witness))):
            return False, f"graph {i} under {p}"
        exists += res.exists
    return True, f"100 graphs, {exists} with a non-trivial equilibrium"


def shift_constructions():
    return _summary(check_shift_equivalences(flat_n=5, family_n=4, shift2_n=5))


def determinism():
    graphs = [c.graph for c in gadget_compositions(HostSample(max_extras=2, samples=4))]
    graphs += [build_sat_reduction(f, mode)[0] for f in lemma11_formulas() for mode in MODES]
    for g in graphs:
        inst = PggInstance(g, SINGLE_NEIGHBOR)
        serial = enumerate_ntpne(inst, workers=1)
        if any(enumerate_ntpne(inst, workers=w) != serial for w in (2, 8)):
            return False, f"graph with {g.n} nodes"
    return True, f"{len(graphs)} graphs, workers 1/2/8"


CRITERIA = [
    (1, "structure laws", structure_laws, 10),
    (2, "reduction equivalence", reduction_equivalence, 300),
    (3, "lemma suite", lemma_suite, 600),
    (4, "degree bound", degree_bound, 60),
    (5, "AMSN repair loop", amsn_repair_loop, 120),
    (6, "AMSN algorithm 1", amsn_algorithm1_oracle, 60),
    (7, "parity solver", parity_oracle, 60),
    (8, "shift constructions", shift_constructions, 600),
    (9, "parallel determinism", determinism, 600),
]


def evaluate(number, name, fn, budget):
    t0 = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < budget
    line = f"ACCEPT {number} {name}: {'PASS' if ok else 'FAIL'} ({detail}; {elapsed:.1f}s < {budget}s)"
    return ok, line


@pytest.mark.parametrize("number,name,fn,budget", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(number, name, fn, budget, request):
    ok, line = evaluate(number, name, fn, budget)
    reporter = request.config.pluginmanager.getplugin("terminalreporter")
    if reporter is not None:
        reporter.write_line("")
        reporter.write_line(line)
    else:
        print(line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    raise SystemExit(0 if all(ok for ok, _ in results) else 1)
