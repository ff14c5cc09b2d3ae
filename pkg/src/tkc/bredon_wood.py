"""Skip-sums and the Bredon-Wood genus function N(x, y).

For x/y = [a_0, ..., a_n] the b-sequence starts at b_0 = a_0 and continues

    b_i = 0    if b_{i-1} = a_{i-1} and b_0 + ... + b_{i-1} is even,
    b_i = a_i  otherwise,

i.e. the terms are added up left to right but a term is skipped whenever the
previous one was kept and the running sum is even.  Sigma(x/y) is the total.
When x is even, Sigma is even too and N(x, y) = Sigma(x/y) / 2 is the
minimal genus of a closed non-orientable surface in the lens space L(x, y);
for odd x Sigma is still defined but halving it has no meaning, so n_genus
refuses.

step_reduce_count computes the same quantity a second, independent way: it
repeatedly rewrites the tail of the term list and counts the rewrites, with
2 * steps = Sigma.  The test suite plays the two routes against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from tkc.continued_fraction import ContinuedFraction, expand
from tkc.exact_arith import gcd


class ParityError(ValueError):
    """x is odd, so Sigma(x/y) need not be even and N(x, y) is undefined."""


class ReductionStuckError(RuntimeError):
    """No reduction rule applies before reaching [0]; internal invariant broken."""


@dataclass(frozen=True)
class SkipTrace:
    """The b-sequence of a canonical CF together with its total."""

    source: ContinuedFraction
    b: tuple[int, ...]
    sigma: int


def skip_trace(cf: ContinuedFraction) -> SkipTrace:
    """Run the skip rule over the terms of a canonical CF."""
    a = cf.terms
    b = [a[0]]
    total = a[0]
    for i in range(1, len(a)):
        nxt = 0 if (b[i - 1] == a[i - 1] and total % 2 == 0) else a[i]
        b.append(nxt)
        total += nxt
    return SkipTrace(cf, tuple(b), total)


def sigma(x: int, y: int) -> int:
    """Sigma(x/y) for coprime positive x, y. Defined for odd x as well."""
    if x < 1 or y < 1:
        raise ValueError(f"sigma needs positive arguments, got ({x}, {y})")
    return skip_trace(expand(x, y)).sigma


def n_genus(x: int, y: int) -> int:
    """N(x, y) = Sigma(x/y) / 2 for coprime x, y with x even, x >= 2."""
    if x % 2 != 0 or x < 2:
        raise ParityError(
            f"N({x},{y}) undefined: x must be even and >= 2 "
            f"(Sigma(x/y) is only guaranteed even for even x)"
        )
    if y < 1:
        raise ValueError(f"denominator must be positive, got {y}")
    if gcd(x, y) != 1:
        raise ValueError(f"N({x},{y}) needs coprime arguments, gcd = {gcd(x, y)}")
    s = sigma(x, y)
    assert s % 2 == 0, f"Sigma({x}/{y}) = {s} is odd despite even x"
    return s // 2


def step_reduce_count(cf: ContinuedFraction) -> int:
    """Count tail-reduction steps from the term list down to [0].

    One step rewrites the last term a of the current list:

        a >= 4:  replace a by a - 2
        a  = 3:  drop it and add 1 to the new last term
        a  = 2:  drop the last two terms ([2] alone drops to the empty
                 list, which counts as [0])

    A list ending in 1 stands for its merged form [..., a, 1] = [..., a + 1],
    so trailing 1s are absorbed between steps without being counted.  For a
    CF whose value has an even numerator this terminates and the step count
    is Sigma / 2.  Other inputs may get stuck, which raises.
    """
    state = list(cf.terms)
    steps = 0
    while state and state != [0]:
        while len(state) > 1 and state[-1] == 1:
            state.pop()
            state[-1] += 1
        last = state[-1]
        if last >= 4:
            state[-1] = last - 2
        elif last == 3:
            if len(state) == 1:
                raise ReductionStuckError(f"cannot reduce {state}: lone 3")
            state.pop()
            state[-1] += 1
        elif last == 2:
            del state[-2:]
        else:
            raise ReductionStuckError(f"no reduction rule for {state}")
        steps += 1
    return steps
