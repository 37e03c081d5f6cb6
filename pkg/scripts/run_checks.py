"""Run the verification suites and print one line per claim.

    python scripts/run_checks.py --suite all
    python scripts/run_checks.py --suite gadgets --exhaustive
"""

from __future__ import annotations

import argparse
import time

from pubgoods.verification import SUITES, HostSample, check_gadget_lemmas, format_reports, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--suite", choices=SUITES, default="all")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--exhaustive", action="store_true", help="enumerate every host attachment in the gadget suite")
    args = ap.parse_args()

    t0 = time.perf_counter()
    if args.exhaustive and args.suite == "gadgets":
        reports = check_gadget_lemmas(HostSample(samples=None), workers=args.workers)
    else:
        reports = run_suite(args.suite, workers=args.workers)
    print(format_reports(reports))
    failed = [r for r in reports if not r.passed]
    for r in failed:
        for graph, profile in r.counterexamples[:3]:
            print(f"  {r.lemma_id}: n={graph.n} edges={graph.edges()} profile={profile}")
    print(f"{len(reports) - len(failed)}/{len(reports)} passed in {time.perf_counter() - t0:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
