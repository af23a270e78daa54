#!/usr/bin/env python3
"""Run the headline extremal-verification campaigns and write reports.

The quick tier finishes in a few seconds; the full tier adds the n=8
exhaustive run and the n=10 dense-mode run (a couple of minutes single
threaded).
"""

import argparse
import pathlib
import sys

from abcover import (verify_factor_extremal, verify_size_extremal,
                     verify_spectral_extremal, write_reports)

QUICK = [
    ("main0", verify_size_extremal, dict(n=6, a=1, b=1)),
    ("main0", verify_size_extremal, dict(n=7, a=1, b=2)),
    ("main1", verify_spectral_extremal, dict(n=6, a=1, b=1)),
    ("hao_li_size", verify_factor_extremal, dict(n=4, a=1, b=2)),
    ("hao_li_size", verify_factor_extremal, dict(n=5, a=2, b=2)),
    ("hao_li_size", verify_factor_extremal, dict(n=7, a=1, b=3)),
]
FULL = QUICK + [
    ("main0", verify_size_extremal, dict(n=8, a=1, b=1)),
    ("main0", verify_size_extremal, dict(n=10, a=2, b=2, corpus="dense")),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tier", choices=["quick", "full"], default="quick")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--out", default="results/campaigns.txt")
    args = parser.parse_args()

    reports = []
    worst = 0
    for name, runner, kwargs in (QUICK if args.tier == "quick" else FULL):
        report = runner(jobs=args.jobs, **kwargs)
        reports.append(report)
        print(f"{name} {kwargs}: {report.status} "
              f"(value {report.extremal_value}, {report.elapsed:.1f}s)")
        if report.status != "pass":
            worst = 1
    out = pathlib.Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    write_reports(str(out), reports)
    print(f"wrote {len(reports)} reports to {out}")
    return worst


if __name__ == "__main__":
    sys.exit(main())
