"""Torus-knot normalization, classification, and knot-level invariants.

Conventions: T(p,q), T(q,p), and all sign changes are the same knot, so
parameters are normalized to p, q > 0 with p even for even knots (pq even)
and p > q for odd knots (pq odd).  T(p,q) with p or q equal to 1 is the
unknot, kept as a separate value so the formulas below never see it.

For a nontrivial normalized knot:

    crosscap       = N(p, q)                    pq even
                   = N(pq - 1, p^2)             pq odd, type A
                   = N(pq + 1, p^2)             pq odd, type B
    boundary slope = pq, pq - 1, pq + 1         in the same three cases
    genus          = (p - 1)(q - 1) / 2
    gamma          = min(2 * genus, crosscap)   (= crosscap for torus knots)

where type A/B is decided by the parity of the unique x in (0, p) with
x*q = -1 (mod p): even gives A, odd gives B.  Crosscap is additive over
connected sums of torus knots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from tkc.bredon_wood import n_genus
from tkc.continued_fraction import convergents, expand
from tkc.exact_arith import gcd, solve_neg_inverse

EVEN = "even"
TYPE_A = "A"
TYPE_B = "B"
UNKNOT_KIND = "unknot"


@dataclass(frozen=True)
class Unknot:
    """The trivial knot; crosscap 0 by convention."""


UNKNOT = Unknot()


@dataclass(frozen=True, order=True)
class TorusKnot:
    """Normalized nontrivial torus knot T(p, q)."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 2 or self.q < 2:
            raise ValueError(f"T({self.p},{self.q}) is not a nontrivial normalized knot")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"T({self.p},{self.q}) needs coprime parameters")
        if (self.p * self.q) % 2 == 0:
            if self.p % 2 != 0:
                raise ValueError(f"even knot T({self.p},{self.q}) must list the even parameter first")
        elif self.p < self.q:
            raise ValueError(f"odd knot T({self.p},{self.q}) must have p > q")

    def __str__(self) -> str:
        return f"T({self.p},{self.q})"


Knot = Union[TorusKnot, Unknot]


@dataclass(frozen=True)
class Classification:
    """Parity class of a knot, with the modular witness for odd knots.

    kind is "even", "A", "B", or "unknot"; witness is the unique solution x
    of x*q = -1 (mod p) in (0, p) when kind is A or B, else None.
    """

    kind: str
    witness: int | None

    @property
    def parity(self) -> str:
        return "odd" if self.kind in (TYPE_A, TYPE_B) else self.kind


@dataclass(frozen=True)
class SplitPair:
    """Split of an odd torus knot into two torus knots along a spanning arc.

    knot_a = (r1, s1) and knot_b = (r2, s2) satisfy r1 + r2 = p,
    s1 + s2 = q and 1 + r1*q = 0 (mod p); the parities of the four entries
    are determined by the type of the knot.
    """

    knot_a: tuple[int, int]
    knot_b: tuple[int, int]


@dataclass(frozen=True)
class InvariantReport:
    """All computed invariants of one knot."""

    knot: Knot
    classification: Classification
    crosscap: int
    boundary_slope: int
    genus: int
    gamma: int
    upper_bound: int
    bound_floored: bool


def normalize(p_raw: int, q_raw: int) -> Knot:
    """Normalized knot for any coprime nonzero parameter pair."""
    if p_raw == 0 or q_raw == 0:
        raise ValueError(f"({p_raw},{q_raw}): parameters must be nonzero")
    p, q = abs(p_raw), abs(q_raw)
    if gcd(p, q) != 1:
        raise ValueError(f"({p_raw},{q_raw}): parameters must be coprime, gcd = {gcd(p, q)}")
    if p == 1 or q == 1:
        return UNKNOT
    if (p * q) % 2 == 0:
        if q % 2 == 0:
            p, q = q, p
    elif p < q:
        p, q = q, p
    return TorusKnot(p, q)


def classify(k: TorusKnot) -> Classification:
    """Even, or type A/B by the parity of the witness x*q = -1 (mod p)."""
    if (k.p * k.q) % 2 == 0:
        return Classification(EVEN, None)
    x = solve_neg_inverse(k.q, k.p)
    return Classification(TYPE_A if x % 2 == 0 else TYPE_B, x)


def crosscap(k: Knot) -> int:
    """Minimal genus of a non-orientable spanning surface; 0 for the unknot."""
    if isinstance(k, Unknot):
        return 0
    c = classify(k)
    if c.kind == EVEN:
        return n_genus(k.p, k.q)
    if c.kind == TYPE_A:
        return n_genus(k.p * k.q - 1, k.p * k.p)
    return n_genus(k.p * k.q + 1, k.p * k.p)


def boundary_slope(k: TorusKnot) -> int:
    """Slope of the minimal non-orientable spanning surface; always even."""
    c = classify(k)
    if c.kind == EVEN:
        return k.p * k.q
    if c.kind == TYPE_A:
        return k.p * k.q - 1
    return k.p * k.q + 1


def genus(k: Knot) -> int:
    """Orientable genus (p-1)(q-1)/2; 0 for the unknot."""
    if isinstance(k, Unknot):
        return 0
    return (k.p - 1) * (k.q - 1) // 2


def _upper_bound_fraction(k: TorusKnot) -> Fraction:
    return min(Fraction((k.p - 1) * k.q, 2), Fraction((k.q - 1) * k.p, 2))


def crosscap_upper_bound(k: TorusKnot) -> int:
    """Crossing-count bound min{(p-1)q/2, (q-1)p/2}, floored if fractional.

    At least one candidate is an integer (one of (p-1)q, (q-1)p is even);
    the min is fractional only for even knots with p < q, and flooring is
    reported through InvariantReport.bound_floored.
    """
    return math.floor(_upper_bound_fraction(k))


def gamma(k: Knot) -> int:
    """min(2 * genus, crosscap); equals crosscap for nontrivial torus knots."""
    return min(2 * genus(k), crosscap(k))


def connected_sum_crosscap(knots: Sequence[Knot] | Iterable[Knot]) -> int:
    """Crosscap of the connected sum: the sum of the summands' crosscaps."""
    knots = list(knots)
    if not knots:
        raise ValueError("connected sum needs at least one knot")
    return sum(crosscap(k) for k in knots)


def split(k: TorusKnot) -> SplitPair:
    """Split an odd torus knot along its spanning arc into K_A and K_B.

    With q/p = [a_0, ..., a_n] and the penultimate convergent written
    num/den: K_A = (den, num) for n even and K_B = (den, num) for n odd;
    the other knot is the complementary pair (p - den, q - num).
    """
    if (k.p * k.q) % 2 == 0:
        raise ValueError(f"{k} is even; the split is defined for odd knots only")
    table = convergents(expand(k.q, k.p))
    n = len(table.numerators) - 1
    num, den = table.pair(n - 1)
    near = (den, num)
    far = (k.p - den, k.q - num)
    if n % 2 == 0:
        return SplitPair(knot_a=near, knot_b=far)
    return SplitPair(knot_a=far, knot_b=near)


def genus_sum_decomposition(k: TorusKnot) -> tuple[int, int]:
    """Crosscap of an odd knot as a sum of two smaller genus values.

    Type A gives (N(r1, s1), N(s2, r2)); type B gives (N(s1, r1), N(r2, s2)).
    The parts always sum to crosscap(k).
    """
    c = classify(k)
    if c.kind == EVEN:
        raise ValueError(f"{k} is even; the decomposition is defined for odd knots only")
    pair = split(k)
    (r1, s1), (r2, s2) = pair.knot_a, pair.knot_b
    if c.kind == TYPE_A:
        return n_genus(r1, s1), n_genus(s2, r2)
    return n_genus(s1, r1), n_genus(r2, s2)


def invariants(k: Knot) -> InvariantReport:
    """Full invariant report for a normalized knot or the unknot."""
    if isinstance(k, Unknot):
        return InvariantReport(
            knot=k,
            classification=Classification(UNKNOT_KIND, None),
            crosscap=0,
            boundary_slope=0,
            genus=0,
            gamma=0,
            upper_bound=0,
            bound_floored=False,
        )
    bound = _upper_bound_fraction(k)
    return InvariantReport(
        knot=k,
        classification=classify(k),
        crosscap=crosscap(k),
        boundary_slope=boundary_slope(k),
        genus=genus(k),
        gamma=gamma(k),
        upper_bound=math.floor(bound),
        bound_floored=bound.denominator != 1,
    )
