"""Exact q-analogue Ehrhart computations for lattice polytopes and posets."""

from ._core import (
    ParseError,
    Polytope,
    Poset,
    PreconditionError,
    ValidationError,
    carlitz_bernoulli,
    cyclotomic,
    gaussian_binomial,
    macmahon_polynomial,
    q_integer,
    verify,
)

__all__ = [
    "ParseError",
    "Polytope",
    "Poset",
    "PreconditionError",
    "ValidationError",
    "carlitz_bernoulli",
    "cyclotomic",
    "gaussian_binomial",
    "macmahon_polynomial",
    "q_integer",
    "verify",
]
