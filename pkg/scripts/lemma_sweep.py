#!/usr/bin/env python3
"""Sweep every identity suite up to a bound and time the runs.

Usage: python scripts/lemma_sweep.py [MAX_P]

Exits nonzero if any suite reports a counterexample, printing enough
context (CF terms, both sides of the identity) to chase it by hand.
"""

import sys
import time

from tkc.verification import SUITES, run_suite


def sweep(max_p: int) -> int:
    worst = 0
    for name in SUITES[:-1]:
        started = time.perf_counter()
        report = run_suite(name, max_p)
        elapsed = time.perf_counter() - started
        status = "ok" if report.passed else f"{len(report.failures)} FAILURES"
        print(f"{name:>10}: {report.cases:>6} cases, {report.skipped:>6} skipped, "
              f"{elapsed:6.2f}s  {status}")
        for failure in report.failures[:20]:
            print(f"    {failure}")
        worst = max(worst, len(report.failures))
    return 1 if worst else 0


if __name__ == "__main__":
    sys.exit(sweep(int(sys.argv[1]) if len(sys.argv) > 1 else 99))
