#!/usr/bin/env python3
"""Print the invariant table for every normalized torus knot in a box.

Usage: python scripts/crosscap_table.py [MAX_P] [MAX_Q]
"""

import math
import sys

from tkc.torus_knot import TorusKnot, invariants, normalize


def table(max_p: int, max_q: int):
    knots = set()
    for a in range(2, max_p + 1):
        for b in range(2, max_q + 1):
            if math.gcd(a, b) != 1:
                continue
            knot = normalize(a, b)
            if isinstance(knot, TorusKnot):
                knots.add(knot)
    print(f"{'knot':>10} {'class':>5} {'x':>4} {'crosscap':>8} "
          f"{'slope':>6} {'genus':>6} {'bound':>6}")
    for knot in sorted(knots):
        report = invariants(knot)
        cls = report.classification
        witness = cls.witness if cls.witness is not None else "-"
        print(f"{str(knot):>10} {cls.kind:>5} {witness!s:>4} {report.crosscap:>8} "
              f"{report.boundary_slope:>6} {report.genus:>6} {report.upper_bound:>6}")


if __name__ == "__main__":
    max_p = int(sys.argv[1]) if len(sys.argv) > 1 else 15
    max_q = int(sys.argv[2]) if len(sys.argv) > 2 else 15
    table(max_p, max_q)
