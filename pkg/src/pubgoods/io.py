"""Text formats: DIMACS CNF, edge lists, patterns, profiles, role maps, DOT."""

from __future__ import annotations

from typing import List, Optional, Sequence

from .core import NAMED_PATTERNS, Graph, InputError, Pattern, Profile, profile_from_str
from .reductions.roles import ROLE_KINDS, ReductionMap, Role
from .reductions.sat import CnfFormula

# guards against absurd headers allocating huge tables
MAX_SIZE = 1_000_000


class ParseError(InputError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {token[:20]!r}", line) from None


def parse_dimacs_cnf(text: str) -> CnfFormula:
    """Parse DIMACS CNF, requiring exactly three distinct, non-complementary
    literals per clause. Clauses may span lines; a ``%`` line ends the input."""
    header = None
    clauses: List[List[int]] = []
    current: List[int] = []
    start = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise ParseError("problem line must be 'p cnf <vars> <clauses>'", lineno)
            header = (_int(parts[2], lineno, "variable count"), _int(parts[3], lineno, "clause count"))
            if not (0 <= header[0] <= MAX_SIZE and 0 <= header[1] <= MAX_SIZE):
                raise ParseError(f"counts must lie in 0..{MAX_SIZE}", lineno)
            continue
        if header is None:
            raise ParseError("clause before problem line", lineno)
        for tok in line.split():
            lit = _int(tok, lineno, "literal")
            if start is None:
                start = lineno
            if lit == 0:
                _check_clause(current, header[0], start)
                clauses.append(current)
                current, start = [], None
            else:
                current.append(lit)
    if header is None:
        raise ParseError("missing problem line")
    if current:
        raise ParseError("last clause is not terminated by 0", start)
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula.from_dimacs(header[0], clauses)


def _check_clause(lits: List[int], num_vars: int, line: int) -> None:
    if len(lits) != 3:
        raise ParseError(f"clause has {len(lits)} literals, need exactly 3", line)
    for lit in lits:
        if abs(lit) > num_vars:
            raise ParseError(f"variable {abs(lit)} exceeds declared count {num_vars}", line)
    if len(set(lits)) != 3:
        raise ParseError("clause repeats a literal", line)
    if len({abs(l) for l in lits}) != 3:
        raise ParseError("clause holds a variable together with its negation", line)


def write_dimacs_cnf(cnf: CnfFormula) -> str:
    lines = [f"p cnf {cnf.num_vars} {len(cnf.clauses)}"]
    lines += [" ".join(str(l.dimacs) for l in c) + " 0" for c in cnf.clauses]
    return "\n".join(lines) + "\n"


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_edge_list(text: str) -> Graph:
    """Header ``n m`` then ``m`` lines ``u v`` (0-based). ``#`` starts a comment."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing 'n m' header")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2:
        raise ParseError("header must be 'n m'", lineno)
    n, m = _int(parts[0], lineno, "node count"), _int(parts[1], lineno, "edge count")
    if not (0 <= n <= MAX_SIZE and 0 <= m <= MAX_SIZE):
        raise ParseError(f"counts must lie in 0..{MAX_SIZE}", lineno)
    if len(lines) - 1 != m:
        raise ParseError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        u, v = _int(parts[0], lineno, "node id"), _int(parts[1], lineno, "node id")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"node id out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at node {u}", lineno)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def serialize_edge_list(graph: Graph) -> str:
    edges = graph.edges()
    return "".join([f"{graph.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def parse_pattern(text: str) -> Pattern:
    """``prefix:tail`` bits, or a name such as ``sn``, ``amsn``, ``best-shot``."""
    key = text.strip().lower()
    if key in NAMED_PATTERNS:
        return NAMED_PATTERNS[key]
    try:
        return Pattern.parse(key)
    except InputError as exc:
        raise ParseError(str(exc)) from None


def parse_profile(text: str, n: Optional[int] = None) -> Profile:
    try:
        bits = profile_from_str(text)
    except InputError as exc:
        raise ParseError(str(exc)) from None
    if n is not None and len(bits) != n:
        raise ParseError(f"profile has {len(bits)} bits, graph has {n} nodes")
    return bits


def write_map(rmap: ReductionMap) -> str:
    """One line per node: ``id Kind key=value ...``."""
    out = []
    for i, role in enumerate(rmap):
        fields = [str(i), role.kind] + [f"{k}={v}" for k, v in role.params]
        out.append(" ".join(fields) + "\n")
    return "".join(out)


def _param(value: str):
    body = value[1:] if value.startswith("-") else value
    return int(value) if body.isdigit() else value


def parse_map(text: str) -> ReductionMap:
    roles = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) < 2:
            raise ParseError("map line must be 'id Kind key=value ...'", lineno)
        if _int(parts[0], lineno, "node id") != len(roles):
            raise ParseError(f"expected node id {len(roles)}", lineno)
        if parts[1] not in ROLE_KINDS:
            raise ParseError(f"unknown role {parts[1][:20]!r}", lineno)
        params = []
        for item in parts[2:]:
            key, sep, value = item.partition("=")
            if not sep or not key or not value:
                raise ParseError(f"bad parameter {item[:20]!r}", lineno)
            params.append((key, _param(value)))
        roles.append(Role(parts[1], tuple(params)))
    return ReductionMap(tuple(roles))


def _node_label(i: int, rmap: Optional[ReductionMap]) -> str:
    if rmap is None or i >= len(rmap):
        return str(i)
    role = rmap[i]
    extra = ",".join(f"{k}={v}" for k, v in role.params)
    return f"{i}\\n{role.kind}" + (f"\\n{extra}" if extra else "")


def export_dot(graph: Graph, profile: Optional[Sequence[int]] = None, rmap: Optional[ReductionMap] = None) -> str:
    """Undirected DOT; nodes playing 1 are filled black with white text."""
    if profile is not None and len(profile) != graph.n:
        raise InputError(f"profile has {len(profile)} bits, graph has {graph.n} nodes")
    lines = ["graph G {", "  node [shape=circle];"]
    for i in range(graph.n):
        attrs = [f'label="{_node_label(i, rmap)}"']
        if profile is not None and profile[i]:
            attrs += ["style=filled", "fillcolor=black", "fontcolor=white"]
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for u, v in graph.edges():
        lines.append(f"  n{u} -- n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "MAX_SIZE",
    "ParseError",
    "export_dot",
    "parse_dimacs_cnf",
    "parse_edge_list",
    "parse_map",
    "parse_pattern",
    "parse_profile",
    "serialize_edge_list",
    "write_dimacs_cnf",
    "write_map",
]
