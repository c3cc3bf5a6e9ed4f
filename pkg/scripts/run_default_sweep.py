#!/usr/bin/env python3
"""Run the full default sweep (d 3..6, defects 1..3, t 0..2, 5 seeds) and
write the report next to this script; exits 5 on any unexpected mismatch."""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from ghlie.sweep import SweepConfig, run_sweep, sweep_exit_code  # noqa: E402


def main() -> int:
    out = pathlib.Path(__file__).with_name("default_sweep_report.json")
    report = run_sweep(SweepConfig())
    out.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    s = report["summary"]
    print(
        f"cases={s['cases']} matching={s['rows_matching']} "
        f"expected_mismatches={s['expected_mismatches']} "
        f"unexpected={s['unexpected_mismatches']} -> {out.name}"
    )
    return sweep_exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
