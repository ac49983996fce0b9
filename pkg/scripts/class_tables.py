#!/usr/bin/env python3
"""Sweep fundamental discriminants and tabulate narrow class data.

For each fundamental discriminant in the requested range this prints the
number of reduced-form classes, cross-checked against an independent
counting routine that never touches the reduction or composition code.
With --table it also prints the full composition table for each
discriminant (rows and columns are indices into the representative
list).

Examples:
    python3 scripts/class_tables.py --lo -60 --hi 60
    python3 scripts/class_tables.py --lo -23 --hi -23 --table
"""

from __future__ import annotations

import argparse

from cubeforms.base_field import FIELD_Q
from cubeforms.errors import AlgebraError
from cubeforms.oracle import reduced_definite_count, reduced_indefinite_cycle_count
from cubeforms.quadratic_extension import make_extension
from cubeforms.quadratic_forms import (
    compose_forms,
    equivalent_forms,
    narrow_class_representatives,
)
from cubeforms.serialization import pretty_form


def composition_table(ext, reps) -> list[list[int]]:
    table = []
    for qi in reps:
        row = []
        for qj in reps:
            prod = compose_forms(ext, qi, qj)
            matches = [k for k, qk in enumerate(reps) if equivalent_forms(prod, qk)]
            assert len(matches) == 1, "composition left the representative set"
            row.append(matches[0])
        table.append(row)
    return table


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--lo", type=int, default=-60, help="range start (default: -60)")
    parser.add_argument("--hi", type=int, default=60, help="range end (default: 60)")
    parser.add_argument(
        "--table", action="store_true", help="print composition tables too"
    )
    args = parser.parse_args(argv)

    mismatches = 0
    for d in range(args.lo, args.hi + 1):
        try:
            ext = make_extension(FIELD_Q, FIELD_Q.element(d))
        except AlgebraError:
            continue
        reps = narrow_class_representatives(ext)
        if d < 0:
            expected = reduced_definite_count(d)
        else:
            expected = reduced_indefinite_cycle_count(d)
        tag = "" if expected == len(reps) else "  MISMATCH"
        if expected != len(reps):
            mismatches += 1
        print(f"D={d:>5}  h={len(reps)}  oracle={expected}{tag}")
        if args.table:
            for i, q in enumerate(reps):
                print(f"  [{i}] {pretty_form(q)}")
            for row in composition_table(ext, reps):
                print("   " + " ".join(str(k) for k in row))
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
