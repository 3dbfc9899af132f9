#!/usr/bin/env python3
"""Seeded random sweep of the invariant suite, with timing.

Library-level equivalent of `lsquare verify`; handy for larger runs, e.g.

    python scripts/sweep_checks.py --count 500 --max-n 7 --max-q 5
"""

import argparse
import time
from collections import Counter

from lsquare.homology import parse_field
from lsquare.randoms import SweepConfig, run_sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--max-q", type=int, default=5)
    parser.add_argument("--field", default="rational")
    args = parser.parse_args()

    config = SweepConfig(
        seed=args.seed, count=args.count, max_n=args.max_n, max_q=args.max_q
    )
    start = time.perf_counter()
    report = run_sweep(config, parse_field(args.field))
    elapsed = time.perf_counter() - start

    sizes = Counter(inst.q for inst in report.instances)
    print(f"{len(report.instances)} instances in {elapsed:.2f}s "
          f"(q histogram: {dict(sorted(sizes.items()))})")
    for inst in report.failures:
        for check in inst.failures:
            print(f"FAIL [{inst.index:03d}] I = {inst.ideal_text} : "
                  f"{check.name} {check.detail}")
    if report.all_passed:
        print("all invariants passed")
        return 0
    print(f"{len(report.failures)} counterexample(s) found")
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
