#!/usr/bin/env python3
"""Run every verification suite and print one line per check, with timings.

Usage: python scripts/run_verify_all.py [--seed N]
Exit code 0 iff every check passes.
"""

import argparse
import sys

from cayley_immanants.verify import run_suite


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    reports = run_suite("all", seed=args.seed)
    width = max(len(f"{r.theorem} [{r.group}]") for r in reports)
    failed = 0
    for r in reports:
        label = f"{r.theorem} [{r.group}]"
        line = f"{label:<{width}}  {r.status.upper():<7} {r.seconds:7.2f}s"
        if r.witness and r.status != "pass":
            line += f"  ({r.witness})"
        print(line)
        failed += r.status == "fail"
    print(f"\n{len(reports)} checks, {failed} failed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
