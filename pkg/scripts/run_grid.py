#!/usr/bin/env python3
"""Run the standard verification grid and write JSON + CSV reports.

Usage: python scripts/run_grid.py [--max-ambient-dim M] [--max-degree D]
                                  [--max-cases K] [--outdir DIR]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from charbound.bounds import GridSpec, verify_grid


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-ambient-dim", type=int, default=8)
    parser.add_argument("--max-degree", type=int, default=5)
    parser.add_argument("--max-cases", type=int, default=500)
    parser.add_argument("--outdir", default="out")
    args = parser.parse_args()

    spec = GridSpec(
        max_ambient_dim=args.max_ambient_dim,
        max_degree_per_factor=args.max_degree,
        max_cases=args.max_cases,
    )
    started = time.perf_counter()
    result = verify_grid(spec)
    elapsed = time.perf_counter() - started

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "reports.json").write_text(result.to_json(), encoding="utf-8")
    (outdir / "reports.csv").write_text(result.to_csv(), encoding="utf-8")

    print(
        f"{len(result.cases)} varieties, {len(result.reports)} reports in {elapsed:.2f}s"
        f" (truncated={str(result.truncated).lower()})"
    )
    print(f"violations: {len(result.violations)}, degenerate-base flags: {len(result.flagged)}")
    for report in result.violations:
        print(f"VIOLATION {report.witness()}")
    print(f"wrote {outdir / 'reports.json'} and {outdir / 'reports.csv'}")
    return 0 if result.all_satisfied else 1


if __name__ == "__main__":
    sys.exit(main())
