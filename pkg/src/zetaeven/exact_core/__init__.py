"""Exact scalars, combinatorics, pi-polynomials and ball arithmetic."""

from fractions import Fraction as BigRational

from .approx import GUARD_BITS, ApproxReal, pi_ball
from .combinatorics import binomial, factorial, falling_factorial
from .pipoly import (
    DivisionExponentUnderflow,
    PiPolynomial,
    pi_poly_add,
    pi_poly_divide,
    pi_poly_eval,
    pi_poly_scale,
)

__all__ = [
    "BigRational",
    "GUARD_BITS",
    "ApproxReal",
    "pi_ball",
    "binomial",
    "factorial",
    "falling_factorial",
    "DivisionExponentUnderflow",
    "PiPolynomial",
    "pi_poly_add",
    "pi_poly_divide",
    "pi_poly_eval",
    "pi_poly_scale",
]
