#!/usr/bin/env python3
"""Randomized scan of the cube-to-ideal product law.

Samples corner cubes over the chosen base ring, keeps the ones whose
discriminant generates a valid quadratic extension, and checks that the
three attached forms map to oriented ideals whose certified product is
the expected principal ideal.  Every ideal product along the way is
recomputed by the naive generator-expansion oracle, so a pass here is
independent of the fast multiplication path.

Examples:
    python3 scripts/scan_cube_law.py --count 200 --seed 7
    python3 scripts/scan_cube_law.py --field Q-sqrt2 --bound 2 --json
"""

from __future__ import annotations

import argparse
import sys
import time

from cubeforms.base_field import FIELDS_BY_NAME
from cubeforms.oracle import RandomSpec, scan_cube_law


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--field",
        default="Q",
        choices=sorted(FIELDS_BY_NAME),
        help="base ring of the sampled cubes (default: Q)",
    )
    parser.add_argument(
        "--count", type=int, default=100, help="cubes to check (default: 100)"
    )
    parser.add_argument(
        "--bound",
        type=int,
        default=3,
        help="coordinate bound for sampled entries (default: 3)",
    )
    parser.add_argument("--seed", type=int, default=0, help="RNG seed (default: 0)")
    parser.add_argument(
        "--json", action="store_true", help="emit the report as one JSON object"
    )
    args = parser.parse_args(argv)

    spec = RandomSpec(
        field_name=args.field, count=args.count, bound=args.bound, seed=args.seed
    )
    start = time.perf_counter()
    report = scan_cube_law(spec)
    elapsed = time.perf_counter() - start

    if args.json:
        print(report.to_json())
    else:
        print(
            f"field={args.field} seed={args.seed} bound={args.bound}: "
            f"attempted {report.attempted}, checked {report.checked}, "
            f"passed {report.passed} in {elapsed:.1f}s"
        )
        for failure in report.failures:
            print(f"  FAIL {failure}", file=sys.stderr)
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
