#!/usr/bin/env python3
"""Run every verification suite and write the reports next to this script.

Produces:
    out/verify_all.txt      one PASS/FAIL line per check
    out/table1.csv          winding-distance reproduction rows
    out/arms_div7.json      spiral-arm report for the divisible-by-7 group
    out/band_ratios.csv     square-number band-area ratios
Exit status is nonzero when any check fails.
"""
import pathlib
import sys

from sqspiral import verify
from sqspiral.arms import classify_systems, enumerate_arms, parse_group, report_json
from sqspiral.constants import constants_report
from sqspiral.published import TABLE1_ROWS
from sqspiral.series import square_band_ratio_series


def main() -> int:
    out = pathlib.Path(__file__).parent / "out"
    out.mkdir(exist_ok=True)

    checks = verify.run_suite("all")
    (out / "verify_all.txt").write_text(verify.render_report(checks))
    failed = [c for c in checks if not c.ok]
    print(f"verify all: {len(checks) - len(failed)}/{len(checks)} checks passed")

    table = verify._table(400)
    report = constants_report(table, [3, 15, 80, 400],
                              probes=[n for n, _, _ in TABLE1_ROWS])
    (out / "table1.csv").write_text(report.winding_table_csv())

    group = parse_group("div:7")
    arms = enumerate_arms(verify._table(600), group, 600)
    (out / "arms_div7.json").write_text(
        report_json(classify_systems(arms, group, 600)))

    (out / "band_ratios.csv").write_text(square_band_ratio_series(200).to_csv())

    print(f"reports in {out}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
