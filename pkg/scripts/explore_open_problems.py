"""Search small connected graphs for a graph with no non-trivial equilibrium.

The default patterns are the two whose complexity is open: T(0)=T(1)=T(2)=1
and T(0)=T(2)=1, both zero beyond. A hit is only a data point; it says nothing
about the complexity of the pattern.

    python scripts/explore_open_problems.py --n-max 7
    python scripts/explore_open_problems.py --pattern 1101:0 --n-max 6
"""

from __future__ import annotations

import argparse
import time

from pubgoods.core import PggInstance
from pubgoods.io import parse_pattern, serialize_edge_list
from pubgoods.solvers import enumerate_pne
from pubgoods.verification import conjecture_search

DEFAULT_PATTERNS = ["111:0", "101:0"]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--pattern", action="append", help="pattern to search (repeatable)")
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--n-min", type=int, default=2)
    args = ap.parse_args()

    for text in args.pattern or DEFAULT_PATTERNS:
        pattern = parse_pattern(text)
        t0 = time.perf_counter()
        graph = conjecture_search(pattern, args.n_max, n_min=args.n_min)
        elapsed = time.perf_counter() - t0
        if graph is None:
            print(f"{pattern}: every connected graph on {args.n_min}..{args.n_max} nodes has one ({elapsed:.1f}s)")
            continue
        pnes = enumerate_pne(PggInstance(graph, pattern))
        print(f"{pattern}: no non-trivial equilibrium on this graph ({elapsed:.1f}s, {len(pnes)} PNE in total)")
        print(serialize_edge_list(graph), end="")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
