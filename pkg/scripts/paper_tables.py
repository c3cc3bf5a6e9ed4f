#!/usr/bin/env python3
"""Print computed vs printed dimension tables for the canonical instances.

One line per (d, defect, variant, t): the five computed dimensions, the
matching printed values, and which displays disagree (suspect displays are
marked 'expected').  A compact view of what the sweep checks row by row.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from ghlie.fixtures import FixtureCase, defect_variants  # noqa: E402
from ghlie.sweep import run_case  # noqa: E402


def main() -> int:
    header = f"{'case':32s} {'m_L':>4s} {'wedge':>5s} {'tensor':>6s} {'j2':>4s} {'psi2':>4s}  notes"
    print(header)
    print("-" * len(header))
    for d in (3, 4, 5, 6):
        for defect in (1, 2, 3):
            if defect == 3 and d < 4:
                continue
            for variant in defect_variants(d, defect):
                for t in (0, 1):
                    case = FixtureCase(d, defect, variant, t, None)
                    row = run_case(case)
                    dims = row["dims"]
                    notes = []
                    for m in row["expected_mismatches"]:
                        notes.append(f"{m['key']}: printed {m['printed']} (expected mismatch)")
                    for m in row["unexpected_mismatches"]:
                        notes.append(f"{m['key']}: printed {m['printed']} UNEXPECTED")
                    print(
                        f"{row['provenance']:32s} {dims['m_L']:4d} {dims['wedge']:5d} "
                        f"{dims['tensor']:6d} {dims['j2']:4d} {dims['psi2_rank']:4d}  "
                        + ("; ".join(notes) if notes else "all printed forms match")
                    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
