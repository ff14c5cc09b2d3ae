"""Unit tests for gcd, rational construction, and the modular witness."""

import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from tkc.exact_arith import gcd, make_rational, solve_neg_inverse


def brute_neg_inverse(q: int, p: int) -> int:
    """Residue scan oracle: the x in (0, p) with x*q = -1 (mod p)."""
    hits = [x for x in range(1, p) if (x * q + 1) % p == 0]
    assert len(hits) == 1, f"expected a unique solution mod {p}, got {hits}"
    return hits[0]


def test_gcd_examples():
    assert gcd(8, 3) == 1
    assert gcd(0, 7) == 7
    assert gcd(226, 625) == 1
    assert gcd(0, 0) == 0
    assert gcd(-12, 18) == 6


def test_make_rational_reduces_and_normalizes_sign():
    assert make_rational(34, 49) == Fraction(34, 49)
    half = make_rational(-2, -4)
    assert (half.numerator, half.denominator) == (1, 2)
    zero = make_rational(0, 5)
    assert (zero.numerator, zero.denominator) == (0, 1)


def test_make_rational_rejects_zero_denominator():
    with pytest.raises(ValueError):
        make_rational(3, 0)


@given(st.integers(-10**9, 10**9), st.integers(1, 10**9),
       st.integers(-50, 50).filter(lambda k: k != 0))
def test_make_rational_scale_invariant(num, den, k):
    assert make_rational(num, den) == make_rational(k * num, k * den)


def test_neg_inverse_examples():
    assert solve_neg_inverse(5, 7) == 4    # 4*5 = 20 = 3*7 - 1
    assert solve_neg_inverse(9, 25) == brute_neg_inverse(9, 25) == 11
    assert solve_neg_inverse(3, 5) == brute_neg_inverse(3, 5) == 3


@given(st.integers(1, 499), st.integers(1, 999))
def test_neg_inverse_matches_brute_force(half_p, q):
    p = 2 * half_p + 1
    assume(math.gcd(p, q) == 1)
    assert solve_neg_inverse(q, p) == brute_neg_inverse(q, p)


def test_neg_inverse_near_ten_thousand():
    for p, q in ((9973, 4321), (10001, 7)):
        assert solve_neg_inverse(q, p) == brute_neg_inverse(q, p)


def test_neg_inverse_arbitrary_precision():
    p = 10**6 + 3
    q = 10**6 - 1
    x = solve_neg_inverse(q, p)
    assert 0 < x < p
    assert (x * q + 1) % p == 0


def test_neg_inverse_rejects_bad_input():
    with pytest.raises(ValueError):
        solve_neg_inverse(5, 10)  # even modulus
    with pytest.raises(ValueError):
        solve_neg_inverse(6, 9)  # not coprime
    with pytest.raises(ValueError):
        solve_neg_inverse(0, 7)
    with pytest.raises(ValueError):
        solve_neg_inverse(2, 1)  # modulus too small
