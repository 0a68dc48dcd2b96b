#!/usr/bin/env python3
"""Run the worked example families end to end and print one line per case.

Usage:
    python scripts/reproduce_examples.py [--self-test] [--sizes 3,4,5]

--self-test injects a wrong transfer time (pi/3) as a negative control; every
family is then expected to report failure.
"""

import argparse
import sys

sys.path.insert(0, "src")

from pairwalk.reproduce import run_paper_examples


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--self-test", action="store_true")
    ap.add_argument("--sizes", help="comma-separated family parameters")
    args = ap.parse_args()
    sizes = None
    if args.sizes is not None:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    results = run_paper_examples(sizes=sizes, wrong_time=args.self_test)
    for r in results:
        print(r.line())
    if args.self_test:
        detected = bool(results) and not any(r.ok for r in results)
        print("negative control detected" if detected else "NEGATIVE CONTROL MISSED")
        return 0 if detected or not results else 3
    ok = all(r.ok for r in results)
    print(f"{sum(r.ok for r in results)}/{len(results)} passed")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
