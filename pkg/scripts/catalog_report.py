"""Run the whole verification catalog and write the CSV report.

Usage: python scripts/catalog_report.py [tol] [outfile]
Writes to stdout when no outfile is given.
"""

import sys
import time

from rfcalc.theorems import reports_to_csv, run_catalog


def main() -> None:
    tol = float(sys.argv[1]) if len(sys.argv) > 1 else 1e-6
    t0 = time.perf_counter()
    reports = run_catalog(tol)
    elapsed = time.perf_counter() - t0
    text = reports_to_csv(reports)
    if len(sys.argv) > 2:
        with open(sys.argv[2], "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    passed = sum(r.passed for r in reports)
    print(f"# {passed}/{len(reports)} passed at tol {tol:g} in {elapsed:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
