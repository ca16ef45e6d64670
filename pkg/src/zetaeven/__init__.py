"""Exact values of zeta at even positive integers, derived two ways.

One route solves a recurrence obtained from the Fourier series of x^(2k);
the other is Euler's Bernoulli-number closed form. The package also checks
the Bernoulli sum identities that connect them and validates the analytic
steps numerically with rigorous error balls.
"""

from .bernoulli import (
    MINUS,
    PLUS,
    BernoulliConvention,
    RationalPolynomial,
    bernoulli_number,
    bernoulli_polynomial,
)
from .exact_core import ApproxReal, PiPolynomial, binomial, factorial, pi_poly_eval
from .report import IdentityInstance, IdentityReport, IdentityViolation
from .zeta_even import (
    ZetaEvenValue,
    verify_lemma15,
    zeta_even_closed,
    zeta_even_numeric,
    zeta_even_recurrence,
)

__version__ = "0.1.0"
