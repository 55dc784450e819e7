#!/usr/bin/env python3
"""Print a survey table of exact invariants for small hypersurface families.

Usage: python scripts/survey_tables.py [--max-ambient-dim M] [--max-degree D]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from charbound.betti import total_betti
from charbound.bounds import betti_bound
from charbound.chern import ample_degree_sequence, euler_characteristic
from charbound.varieties import CompleteIntersection


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-ambient-dim", type=int, default=5)
    parser.add_argument("--max-degree", type=int, default=5)
    args = parser.parse_args()

    header = f"{'variety':<16} {'n':>2} {'d':>3} {'chi':>8} {'b(X)':>8} {'bound':>12}  degree sequence"
    print(header)
    print("-" * len(header))
    for m in range(2, args.max_ambient_dim + 1):
        for d in range(1, args.max_degree + 1):
            ci = CompleteIntersection(m, (d,))
            n = ci.dimension
            seq = ", ".join(map(str, ample_degree_sequence(ci)))
            print(
                f"{str(ci):<16} {n:>2} {d:>3} {euler_characteristic(ci):>8} "
                f"{total_betti(ci):>8} {betti_bound(n, d):>12}  ({seq})"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
