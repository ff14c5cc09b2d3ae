"""Integer and exact rational primitives shared by every other module.

Python integers are already arbitrary precision and ``fractions.Fraction``
already keeps fractions reduced with a positive denominator, so this module
is a thin layer that pins down the contracts the rest of the package leans
on: coprimality checks, the sign convention, and the modular witness used to
classify odd torus knots.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of |a| and |b|, with gcd(0, 0) = 0."""
    return math.gcd(a, b)


def make_rational(num: int, den: int) -> Rational:
    """Reduced fraction with positive denominator; rejects den = 0."""
    if den == 0:
        raise ValueError(f"rational {num}/0 has zero denominator")
    return Fraction(num, den)


def solve_neg_inverse(q: int, p: int) -> int:
    """The unique x with 0 < x < p and x*q = -1 (mod p).

    p must be odd and >= 3, and coprime to q.  Uses the extended Euclidean
    algorithm (O(log p)); the test suite cross-checks it against a residue
    scan.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"modulus must be odd and >= 3, got p={p}")
    if q < 1:
        raise ValueError(f"q must be positive, got q={q}")
    if math.gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")
    old_r, r = q % p, p
    old_s, s = 1, 0
    while r:
        step = old_r // r
        old_r, r = r, old_r - step * r
        old_s, s = s, old_s - step * s
    # old_s * q = gcd = 1 (mod p)
    x = (-old_s) % p
    assert 0 < x < p and (x * q + 1) % p == 0
    return x
