"""Canonical continued fractions, generalized brackets, and convergents.

A canonical continued fraction [a_0, a_1, ..., a_n] has a_0 >= 0, inner
terms >= 1, and a_n > 1 unless n = 0; every non-negative rational has
exactly one such expansion.  A generalized bracket drops all of those
constraints: terms may be zero or negative.

Brackets are evaluated through the 2x2 integer matrix product

    M = T(t_0) T(t_1) ... T(t_n),     T(t) = (t 1; 1 0),

reading off upper-left / lower-left of M.  On canonical fractions this
agrees with the nested-division tower, and it extends the tower to the
degenerate shapes produced by term rewriting -- a trailing 1, a -1, or an
interior 0 -- without any special cases: [..., -1] = [..., -1 applied],
[a, 0, b] = [a + b], and so on all fall out of associativity of the product.
The empty bracket is defined to evaluate like [0].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from tkc.exact_arith import Rational, gcd


class IndeterminateBracketError(ValueError):
    """The bracket's matrix product has lower-left entry 0: no finite value."""


@dataclass(frozen=True)
class ContinuedFraction:
    """Canonical term sequence [a_0, ..., a_n]."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        terms = tuple(int(t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise ValueError("continued fraction needs at least one term")
        if terms[0] < 0:
            raise ValueError(f"leading term must be >= 0: {list(terms)}")
        if any(t < 1 for t in terms[1:]):
            raise ValueError(f"terms after the first must be >= 1: {list(terms)}")
        if len(terms) > 1 and terms[-1] < 2:
            raise ValueError(f"last term must be > 1: {list(terms)}")

    def __str__(self) -> str:
        return "[" + ",".join(str(t) for t in self.terms) + "]"


@dataclass(frozen=True)
class BracketExpr:
    """Bracket with unrestricted integer terms; may be empty (value 0)."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(int(t) for t in self.terms))

    def __str__(self) -> str:
        return "[" + ",".join(str(t) for t in self.terms) + "]"


@dataclass(frozen=True)
class ConvergentTable:
    """Numerators and denominators of every truncation of a canonical CF.

    Row i holds the reduced value of [a_0, ..., a_i].  The rows satisfy the
    three-term recurrence and the unimodularity identity

        num_i * den_{i-1} - num_{i-1} * den_i = (-1)^{i-1}   (i >= 1).
    """

    source: ContinuedFraction
    numerators: tuple[int, ...]
    denominators: tuple[int, ...]

    def pair(self, i: int) -> tuple[int, int]:
        return self.numerators[i], self.denominators[i]

    def fraction(self, i: int) -> Rational:
        return Fraction(self.numerators[i], self.denominators[i])

    @property
    def value(self) -> Rational:
        return self.fraction(len(self.numerators) - 1)


def expand(x: int, y: int) -> ContinuedFraction:
    """Canonical continued fraction of x/y for coprime x >= 0, y >= 1."""
    if y < 1:
        raise ValueError(f"denominator must be positive, got {y}")
    if x < 0:
        raise ValueError(f"numerator must be non-negative, got {x}")
    if gcd(x, y) != 1:
        raise ValueError(f"{x}/{y} is not reduced: gcd = {gcd(x, y)}")
    terms = []
    while True:
        a, r = divmod(x, y)
        terms.append(a)
        if r == 0:
            break
        x, y = y, r
    # Euclidean division never ends a multi-term expansion with a 1
    return ContinuedFraction(tuple(terms))


def evaluate_raw(b: BracketExpr | ContinuedFraction) -> tuple[int, int]:
    """(upper-left, lower-left) of the term-matrix product, unreduced.

    The pair is never (0, 0): each factor has determinant -1, so the product
    is unimodular.
    """
    if not b.terms:
        return 0, 1
    num, num_prev = 1, 0
    den, den_prev = 0, 1
    for t in b.terms:
        num, num_prev = t * num + num_prev, num
        den, den_prev = t * den + den_prev, den
    return num, den


def evaluate(b: BracketExpr | ContinuedFraction) -> Rational:
    """Reduced value of a bracket; raises IndeterminateBracketError on /0."""
    num, den = evaluate_raw(b)
    if den == 0:
        raise IndeterminateBracketError(f"indeterminate bracket {b}: value {num}/0")
    return Fraction(num, den)


def convergents(cf: ContinuedFraction) -> ConvergentTable:
    """Convergent table of a canonical CF; last row equals the full value."""
    nums: list[int] = []
    dens: list[int] = []
    h, h_prev = 1, 0
    k, k_prev = 0, 1
    for a in cf.terms:
        h, h_prev = a * h + h_prev, h
        k, k_prev = a * k + k_prev, k
        nums.append(h)
        dens.append(k)
    return ConvergentTable(cf, tuple(nums), tuple(dens))


def canonicalize(b: BracketExpr | ContinuedFraction) -> ContinuedFraction:
    """The unique canonical CF with the same value as the bracket.

    Defined for determinate brackets with value >= 0; absorbs trailing 1s,
    interior zeros and -1 terms in one shot by evaluating and re-expanding.
    """
    value = evaluate(b)
    if value < 0:
        raise ValueError(f"bracket {b} has negative value {value}; no canonical form")
    return expand(value.numerator, value.denominator)


def reverse_tail(cf: ContinuedFraction) -> BracketExpr:
    """[0, a_1, ..., a_n] -> bracket [a_n, ..., a_1].

    The reversed sequence evaluates to den_n / den_{n-1} of the source's
    convergent table.  It may be non-canonical (a_1 can be 1), hence the
    bracket return type.
    """
    if cf.terms[0] != 0 or len(cf.terms) < 2:
        raise ValueError(f"reversal expects [0, a_1, ..., a_n] with n >= 1, got {cf}")
    return BracketExpr(tuple(reversed(cf.terms[1:])))
