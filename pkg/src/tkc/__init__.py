"""Exact-arithmetic crosscap numbers and boundary slopes of torus knots."""

from tkc.bredon_wood import (
    ParityError,
    ReductionStuckError,
    SkipTrace,
    n_genus,
    sigma,
    skip_trace,
    step_reduce_count,
)
from tkc.continued_fraction import (
    BracketExpr,
    ContinuedFraction,
    ConvergentTable,
    IndeterminateBracketError,
    canonicalize,
    convergents,
    evaluate,
    evaluate_raw,
    expand,
    reverse_tail,
)
from tkc.exact_arith import Rational, gcd, make_rational, solve_neg_inverse
from tkc.torus_knot import (
    UNKNOT,
    Classification,
    InvariantReport,
    Knot,
    SplitPair,
    TorusKnot,
    Unknot,
    boundary_slope,
    classify,
    connected_sum_crosscap,
    crosscap,
    crosscap_upper_bound,
    gamma,
    genus,
    genus_sum_decomposition,
    invariants,
    normalize,
    split,
)
from tkc.verification import (
    CheckFailure,
    VerificationReport,
    run_suite,
    verify_claim,
    verify_criterion,
    verify_delta3,
    verify_final,
    verify_recipro,
    verify_sum,
)

__all__ = [
    "BracketExpr",
    "Classification",
    "CheckFailure",
    "ContinuedFraction",
    "ConvergentTable",
    "IndeterminateBracketError",
    "InvariantReport",
    "Knot",
    "ParityError",
    "Rational",
    "ReductionStuckError",
    "SkipTrace",
    "SplitPair",
    "TorusKnot",
    "UNKNOT",
    "Unknot",
    "VerificationReport",
    "boundary_slope",
    "canonicalize",
    "classify",
    "connected_sum_crosscap",
    "convergents",
    "crosscap",
    "crosscap_upper_bound",
    "evaluate",
    "evaluate_raw",
    "expand",
    "gamma",
    "gcd",
    "genus",
    "genus_sum_decomposition",
    "invariants",
    "make_rational",
    "n_genus",
    "normalize",
    "reverse_tail",
    "run_suite",
    "sigma",
    "skip_trace",
    "solve_neg_inverse",
    "split",
    "step_reduce_count",
    "verify_claim",
    "verify_criterion",
    "verify_delta3",
    "verify_final",
    "verify_recipro",
    "verify_sum",
]
