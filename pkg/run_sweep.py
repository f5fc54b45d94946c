#!/usr/bin/env python3
"""
Standalone script that sweeps every theorem at the configured default scale.
Run from the project root: python -m run_sweep
"""
import logging
import sys

from stairtab.config import DEFAULT_JOBS, DEFAULT_M, DEFAULT_N
from stairtab.job import default_size_max, run_sweep
from stairtab.models import THEOREMS

logger = logging.getLogger(__name__)


def main():
    """Sweep each theorem id and print a banner with the totals."""
    try:
        logger.info(
            "Sweeping %d theorems with n<=%s, m=%s, jobs=%s",
            len(THEOREMS), DEFAULT_N, DEFAULT_M, DEFAULT_JOBS,
        )
        totals = {}
        failures = []
        for theorem in THEOREMS:
            reports = run_sweep(theorem, DEFAULT_N, DEFAULT_M, default_size_max(theorem), jobs=DEFAULT_JOBS)
            failed = [r for r in reports if not r.passed]
            totals[theorem] = (len(reports), len(failed))
            failures += failed

        print("\n" + "=" * 50)
        print("RESULT:")
        print("=" * 50)
        for theorem, (checked, failed) in totals.items():
            print(f"  {theorem:<11} {checked:>6} checked  {failed:>4} failed")

        if failures:
            print("\nFailures:")
            for report in failures:
                print(f"  - {report.theorem} {report.params}: {report.counterexample}")

        print("=" * 50)

        sys.exit(0 if not failures else 1)

    except Exception as e:
        logger.exception("run_sweep failed")
        print(f"\nERROR: {e}", file=sys.stderr)
        sys.exit(2)


if __name__ == "__main__":
    main()
