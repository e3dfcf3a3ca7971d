#!/usr/bin/env python3
"""Compare the support of imm_(n-2,1,1) with the permanent support on C_n.

Covers odd n within the enumeration envelope (7 and 9).  Report only.

Usage: python scripts/explore_conjecture3.py
"""

from cayley_immanants.characters import Partition
from cayley_immanants.groups import GroupSpec
from cayley_immanants.immanants import immanant
from cayley_immanants.supports import count_P


def main() -> None:
    for n in (7, 9):
        spec = GroupSpec((n,))
        support = immanant(spec, Partition((n - 2, 1, 1))).support_size
        p = count_P(spec)
        verdict = "equal" if support == p else "DIFFER"
        print(f"n = {n}:  I_(n-2,1,1)(C{n}) = {support:5d}   P(C{n}) = {p:5d}   {verdict}")


if __name__ == "__main__":
    main()
