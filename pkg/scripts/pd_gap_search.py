#!/usr/bin/env python3
"""Scan abelian groups for orders where the determinant support is smaller.

Streams one line per group so progress is visible; order 12 takes about a
minute per group, everything below is seconds.  Report only: nothing here is
asserted by the test suite.

Usage: python scripts/pd_gap_search.py [--max-order 12]
"""

import argparse
import time

from cayley_immanants.cli import _abelian_groups_of_order
from cayley_immanants.supports import count_D, count_P


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-order", type=int, default=12)
    args = parser.parse_args()

    gap_orders = set()
    for order in range(2, args.max_order + 1):
        for spec in _abelian_groups_of_order(order):
            start = time.perf_counter()
            p, d = count_P(spec), count_D(spec)
            flag = "D<P" if d < p else "   "
            if d < p:
                gap_orders.add(order)
            print(
                f"order {order:3d}  {spec.name:<12} P = {p:7d}  D = {d:7d}  "
                f"{flag}  ({time.perf_counter() - start:.1f}s)",
                flush=True,
            )
    print(f"\norders with D < P up to {args.max_order}: {sorted(gap_orders)}")


if __name__ == "__main__":
    main()
