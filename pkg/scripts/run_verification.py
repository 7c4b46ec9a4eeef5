#!/usr/bin/env python3
"""Run the theorem battery over the default catalogs (p = 2, 3, 5) and print
every report; exits nonzero if any property is violated."""

import argparse
import sys
import time

from psigroups import build_catalog, verify_theorems
from psigroups.catalog import DEFAULT_CATALOGS


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--catalogs", nargs="*", metavar="P:MAX",
        help="override the default catalogs, e.g. --catalogs 2:128 3:81")
    args = parser.parse_args()

    specs = DEFAULT_CATALOGS
    if args.catalogs:
        specs = tuple(
            (int(spec.split(":")[0]), int(spec.split(":")[1])) for spec in args.catalogs)

    violated = False
    for prime, max_order in specs:
        t0 = time.perf_counter()
        cat = build_catalog([prime], max_order)
        reports = verify_theorems(cat)
        elapsed = time.perf_counter() - t0
        print(f"== catalog p={prime} max_order={max_order}: "
              f"{len(cat.entries)} groups, {elapsed:.2f}s")
        for report in reports:
            print(f"  {report.theorem:<24} checked={report.pairs_checked} "
                  f"applicable={report.hypothesis_applicable} "
                  f"violations={len(report.violations)} [{report.status}]")
            for subject, detail in report.violations:
                violated = True
                print(f"    violation {subject}: {detail}")
            for subject, detail in report.notes:
                print(f"    note {subject}: {detail}")
    return 1 if violated else 0


if __name__ == "__main__":
    sys.exit(main())
