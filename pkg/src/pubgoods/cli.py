"""Command-line interface.

Exit codes: 0 success / equilibrium exists / checks pass, 1 clean negative
(no equilibrium, verification or check failure, nothing found), 2 usage or
input error. Errors go to stderr as a single ``error: ...`` line.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .core import (
    AT_MOST_SINGLE_NEIGHBOR,
    BEST_SHOT,
    Graph,
    PggInstance,
    classify,
    deviating_nodes,
    is_parity_pattern,
    profile_to_str,
)
from .io import (
    export_dot,
    parse_dimacs_cnf,
    parse_edge_list,
    parse_map,
    parse_pattern,
    parse_profile,
    serialize_edge_list,
    write_map,
)
from .reductions import build_family, build_flat_replication, build_sat_reduction, build_shift2_gadget_graph, decode_profile
from .reductions.sat import MODES, graph_for_map
from .solvers import SolveResult, Status, auto_solve, decide_ntpne, enumerate_pne, parity_solve
from .solvers.amsn import amsn_algorithm2
from .solvers.independent_sets import best_shot_solve
from .verification import SUITES, conjecture_search, format_reports, run_suite

METHODS = ("auto", "brute", "amsn", "bestshot", "parity")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _read(path: str) -> str:
    return Path(path).read_text()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _graph(path: str) -> Graph:
    return parse_edge_list(_read(path))


def _profile(arg: str, n: Optional[int] = None):
    """A bit string, or a file holding one."""
    text = arg if arg and set(arg) <= {"0", "1"} else _read(arg)
    return parse_profile(text, n)


def _result(method: str, witness) -> SolveResult:
    status = Status.EXISTS if witness is not None else Status.NOT_EXISTS
    return SolveResult(status, witness, 0, 0.0, method)


def _solve(instance: PggInstance, method: str, workers: int) -> SolveResult:
    graph, pattern = instance.graph, instance.pattern
    if method == "auto":
        return auto_solve(instance, workers=workers)
    if method == "brute":
        return decide_ntpne(instance, workers=workers)
    if method == "amsn":
        if pattern != AT_MOST_SINGLE_NEIGHBOR:
            raise UsageError(f"method amsn needs pattern 11:0, got {pattern}")
        return _result("amsn", amsn_algorithm2(graph) if graph.n else None)
    if method == "bestshot":
        if pattern != BEST_SHOT:
            raise UsageError(f"method bestshot needs pattern 1:0, got {pattern}")
        return _result("bestshot", best_shot_solve(graph) if graph.n else None)
    if not is_parity_pattern(pattern):
        raise UsageError(f"method parity needs a pattern with period-2 tail from index 0, got {pattern}")
    return parity_solve(graph, pattern)


def cmd_classify(args) -> int:
    pattern = parse_pattern(args.pattern)
    cls = classify(pattern)
    print(f"pattern {pattern}")
    print("classes " + " ".join(cls.flags()))
    print(f"parity {'yes' if is_parity_pattern(pattern) else 'no'}")
    return 0


def cmd_solve(args) -> int:
    instance = PggInstance(_graph(args.graph), parse_pattern(args.pattern))
    res = _solve(instance, args.method, args.threads)
    if res.exists:
        print(profile_to_str(res.witness))
        return 0
    print("NO")
    return 1


def cmd_verify(args) -> int:
    graph = _graph(args.graph)
    instance = PggInstance(graph, parse_pattern(args.pattern))
    bits = _profile(args.profile, graph.n)
    bad = deviating_nodes(instance, bits)
    if bad:
        print("FAIL deviating " + " ".join(map(str, bad)))
        return 1
    if not any(bits) and not args.allow_trivial:
        print("FAIL trivial")
        return 1
    print("PASS")
    return 0


def cmd_enumerate(args) -> int:
    instance = PggInstance(_graph(args.graph), parse_pattern(args.pattern))
    if args.limit is not None and args.limit < 0:
        raise UsageError("--limit must be non-negative")
    found = enumerate_pne(instance, limit=args.limit, workers=args.threads, nontrivial=not args.include_trivial)
    for bits in found:
        print(profile_to_str(bits))
    return 0 if found else 1


def cmd_reduce_sat(args) -> int:
    cnf = parse_dimacs_cnf(_read(args.cnf))
    graph, rmap = build_sat_reduction(cnf, args.mode)
    _write(args.out_graph, serialize_edge_list(graph))
    if args.out_map:
        _write(args.out_map, write_map(rmap))
    return 0


def cmd_reduce_replicate(args) -> int:
    graph, rmap = build_flat_replication(_graph(args.graph), args.n)
    _write(args.out_graph, serialize_edge_list(graph))
    if args.out_map:
        _write(args.out_map, write_map(rmap))
    return 0


def cmd_reduce_family(args) -> int:
    graph = _graph(args.graph)
    shifted = parse_pattern(args.pattern)
    if args.kind == "shift2":
        members = [build_shift2_gadget_graph(graph, shifted)]
    else:
        members = build_family(graph, shifted, args.kind)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for i, (g, rmap) in enumerate(members):
        (out / f"member_{i}.edges").write_text(serialize_edge_list(g))
        (out / f"member_{i}.map").write_text(write_map(rmap))
    print(f"wrote {len(members)} member(s) to {out}")
    return 0


def cmd_decode(args) -> int:
    cnf = parse_dimacs_cnf(_read(args.cnf))
    rmap = parse_map(_read(args.map))
    graph = graph_for_map(cnf, rmap)
    bits = _profile(args.profile, graph.n)
    assignment = decode_profile(cnf, rmap, bits, graph)
    print(" ".join(str(v + 1 if val else -(v + 1)) for v, val in enumerate(assignment)))
    return 0


def cmd_check(args) -> int:
    reports = run_suite(args.suite, workers=args.threads)
    print(format_reports(reports))
    return 0 if all(r.passed for r in reports) else 1


def cmd_search(args) -> int:
    if not 1 <= args.n_max <= 9:
        raise UsageError("--n-max must lie in 1..9")
    graph = conjecture_search(parse_pattern(args.pattern), args.n_max, n_min=args.n_min)
    if graph is None:
        print("NONE")
        return 1
    sys.stdout.write(serialize_edge_list(graph))
    return 0


def cmd_export_dot(args) -> int:
    graph = _graph(args.graph)
    bits = _profile(args.profile, graph.n) if args.profile else None
    rmap = parse_map(_read(args.map)) if args.map else None
    if rmap is not None and len(rmap) != graph.n:
        raise UsageError(f"map has {len(rmap)} nodes, graph has {graph.n}")
    _write(args.out, export_dot(graph, bits, rmap))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pubgoods", description="Equilibria of binary public goods games on graphs.")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="worker processes for exact search")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", help="classify a best-response pattern")
    s.add_argument("--pattern", required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("solve", help="find a non-trivial equilibrium")
    s.add_argument("--graph", required=True)
    s.add_argument("--pattern", required=True)
    s.add_argument("--method", choices=METHODS, default="auto")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check a profile is a non-trivial equilibrium")
    s.add_argument("--graph", required=True)
    s.add_argument("--pattern", required=True)
    s.add_argument("--profile", required=True, help="bit string or file holding one")
    s.add_argument("--allow-trivial", action="store_true", help="accept the all-zero profile")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("enumerate", help="list equilibria in lexicographic order")
    s.add_argument("--graph", required=True)
    s.add_argument("--pattern", required=True)
    s.add_argument("--limit", type=int)
    s.add_argument("--include-trivial", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("reduce", help="build reduction graphs")
    red = s.add_subparsers(dest="reduction", required=True, parser_class=_Parser)
    r = red.add_parser("sat", help="ONE-IN-THREE 3SAT to Single-Neighbor")
    r.add_argument("--cnf", required=True)
    r.add_argument("--mode", choices=MODES, default="chain")
    r.add_argument("--out-graph", default="-")
    r.add_argument("--out-map")
    r.set_defaults(func=cmd_reduce_sat)
    r = red.add_parser("replicate", help="flat replication")
    r.add_argument("--graph", required=True)
    r.add_argument("--n", type=int, required=True, help="number of replicas per node")
    r.add_argument("--out-graph", default="-")
    r.add_argument("--out-map")
    r.set_defaults(func=cmd_reduce_replicate)
    r = red.add_parser("family", help="shift gadgets for a shifted pattern")
    r.add_argument("--graph", required=True)
    r.add_argument("--pattern", required=True, help="the shifted target pattern")
    r.add_argument("--kind", choices=("sloped", "sharp", "shift2"), required=True)
    r.add_argument("--out-dir", required=True)
    r.set_defaults(func=cmd_reduce_family)

    s = sub.add_parser("decode", help="read an assignment off a reduction equilibrium")
    s.add_argument("--cnf", required=True)
    s.add_argument("--map", required=True)
    s.add_argument("--profile", required=True, help="bit string or file holding one")
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("check", help="run verification suites")
    s.add_argument("--suite", choices=SUITES, default="all")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("search", help="smallest connected graph without a non-trivial equilibrium")
    s.add_argument("--pattern", required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--n-min", type=int, default=2)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("export-dot", help="render a graph as DOT")
    s.add_argument("--graph", required=True)
    s.add_argument("--profile")
    s.add_argument("--map")
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_export_dot)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be >= 1")
        return args.func(args)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else 0
    except (UsageError, ValueError, OSError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"error: {msg}", file=sys.stderr)
        return 2
