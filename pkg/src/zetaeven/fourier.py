"""Fourier analysis of x^(2k) on [-pi, pi].

The cosine moment I(n, k) = integral_0^pi x^(2k) cos(nx) dx is a polynomial
in pi with rational coefficients; repeated integration by parts gives

    I(n, k) = sum_{i=1}^{k} (-1)^n / n^(2i) * (-1)^(i-1) (2k)! / (2k-2i+1)! * pi^(2k-2i+1).

The Fourier series of x^(2k) has a_0 = pi^(2k)/(2k+1), a_n = (2/pi) I(n, k)
and b_n = 0. Evaluating it at x = pi gives the alternating sum
sum_n (-1)^n I(n, k) = k pi^(2k+1) / (2k+1).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .exact_core import (
    GUARD_BITS,
    ApproxReal,
    PiPolynomial,
    falling_factorial,
    pi_ball,
    pi_poly_eval,
)
from .quadrature import PrecisionUnreachable, cosine_moment_quadrature, mpf_to_fraction

__all__ = [
    "FourierCoefficients",
    "PiMultiple",
    "PrecisionUnreachable",
    "fourier_I_closed",
    "fourier_I_quadrature",
    "fourier_coefficients",
    "lemma11_partial_sum",
    "lemma11_target",
    "lemma11_error",
    "quadrature_agrees",
    "reconstruct_at",
]

_ZERO = PiPolynomial()


def _check_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


def fourier_I_closed(n: int, k: int) -> PiPolynomial:
    """Exact integral of x^(2k) cos(nx) over [0, pi]."""
    _check_positive("n", n)
    _check_positive("k", k)
    terms = {}
    for i in range(1, k + 1):
        c = Fraction(falling_factorial(2 * k, 2 * i - 1), n ** (2 * i))
        if (n + i - 1) % 2:
            c = -c
        terms[2 * k - 2 * i + 1] = c
    return PiPolynomial(terms)


def fourier_I_quadrature(n: int, k: int, precision_bits: int = 128, **kwargs) -> ApproxReal:
    """Numerical enclosure of the same integral; see :mod:`zetaeven.quadrature`."""
    _check_positive("n", n)
    _check_positive("k", k)
    return cosine_moment_quadrature(n, k, precision_bits, **kwargs)


def quadrature_agrees(n: int, k: int, precision_bits: int = 128) -> tuple[bool, ApproxReal, ApproxReal]:
    """Whether the quadrature interval contains the closed-form value.

    The closed form is evaluated with 64 extra bits so its own enclosure is
    far narrower than the quadrature radius.
    """
    quad = fourier_I_quadrature(n, k, precision_bits)
    closed = pi_poly_eval(fourier_I_closed(n, k), precision_bits + 64)
    return quad.contains(closed), quad, closed


@dataclass(frozen=True)
class FourierCoefficients:
    """Exact Fourier coefficients of x^(2k) on [-pi, pi] for n <= n_max."""

    k: int
    a0: PiPolynomial
    a: tuple[PiPolynomial, ...]
    b: tuple[PiPolynomial, ...]

    @property
    def n_max(self) -> int:
        return len(self.a)

    def a_n(self, n: int) -> PiPolynomial:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"a_{n} outside 1..{self.n_max}")
        return self.a[n - 1]

    def b_n(self, n: int) -> PiPolynomial:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"b_{n} outside 1..{self.n_max}")
        return self.b[n - 1]


def fourier_coefficients(k: int, n_max: int) -> FourierCoefficients:
    _check_positive("k", k)
    _check_positive("n_max", n_max)
    a0 = PiPolynomial.monomial(Fraction(1, 2 * k + 1), 2 * k)
    # a_n = (2/pi) I(n, k); every exponent of I(n, k) is odd, hence >= 1.
    a = tuple(fourier_I_closed(n, k).scale(2).divide_by_pi(1) for n in range(1, n_max + 1))
    # x^(2k) sin(nx) is odd on [-pi, pi], so each b_n integrates to zero.
    b = (_ZERO,) * n_max
    return FourierCoefficients(k, a0, a, b)


@functools.lru_cache(maxsize=8)
def _lcm_upto(N: int) -> int:
    return math.lcm(*range(1, N + 1))


@functools.lru_cache(maxsize=64)
def _power_sum(s: int, N: int) -> Fraction:
    """Exact sum_{n=1}^{N} n^(-s), accumulated over one common denominator."""
    L = _lcm_upto(N) ** s
    return Fraction(sum(L // n**s for n in range(1, N + 1)), L)


def lemma11_partial_sum(k: int, N: int) -> PiPolynomial:
    """Exact partial sum sum_{n=1}^{N} (-1)^n I(n, k).

    The sign (-1)^n cancels the one inside I(n, k), so the coefficient of
    pi^(2k-2i+1) is (-1)^(i-1) (2k)!/(2k-2i+1)! times sum_{n<=N} n^(-2i).
    """
    _check_positive("k", k)
    _check_positive("N", N)
    terms = {}
    for i in range(1, k + 1):
        c = falling_factorial(2 * k, 2 * i - 1) * _power_sum(2 * i, N)
        terms[2 * k - 2 * i + 1] = c if i % 2 else -c
    return PiPolynomial(terms)


def lemma11_target(k: int) -> PiPolynomial:
    """The limit k pi^(2k+1) / (2k+1) of the alternating partial sums."""
    _check_positive("k", k)
    return PiPolynomial.monomial(Fraction(k, 2 * k + 1), 2 * k + 1)


def lemma11_error(k: int, N: int, precision_bits: int = 128) -> ApproxReal:
    """Enclosure of partial_sum(k, N) - k pi^(2k+1)/(2k+1)."""
    return pi_poly_eval(lemma11_partial_sum(k, N) - lemma11_target(k), precision_bits)


@dataclass(frozen=True)
class PiMultiple:
    """The point ``factor * pi``; cosines at such points are exact when 2*factor is an integer."""

    factor: Fraction

    def __post_init__(self):
        object.__setattr__(self, "factor", Fraction(self.factor))


def _exact_cos_pi(t: Fraction) -> Fraction | None:
    """cos(t*pi) when it is rational for half-integer t, else None."""
    if (2 * t).denominator != 1:
        return None
    return (Fraction(1), Fraction(0), Fraction(-1), Fraction(0))[int(2 * t) % 4]


def _cos_ball(n: int, x, wp: int) -> ApproxReal:
    if isinstance(x, PiMultiple):
        t = n * x.factor
        exact = _exact_cos_pi(t)
        if exact is not None:
            return ApproxReal.from_rational(exact, wp)
        with mpmath.workprec(wp + 16):
            c = mpmath.cospi(mpmath.mpf(t.numerator) / t.denominator)
            err = Fraction(1, 1 << (wp - 2))
    else:
        with mpmath.workprec(wp + 16):
            arg = n * (mpmath.mpf(x.numerator) / x.denominator)
            c = mpmath.cos(arg)
            # argument rounding (|d cos| <= |d arg|) plus evaluation error
            err = Fraction(n * (abs(x) + 1), 1 << (wp - 2))
    return ApproxReal.from_rational(mpf_to_fraction(c), wp, radius=err)


def reconstruct_at(
    k: int,
    x,
    N: int,
    precision_bits: int = 128,
    coefficients: FourierCoefficients | None = None,
) -> ApproxReal:
    """Enclose the truncated series a_0 + sum_{n<=N} a_n cos(nx).

    ``x`` is a :class:`PiMultiple` or a rational point; either way it must
    lie in [-pi, pi]. ``coefficients`` may be supplied to evaluate a
    substitute table (it must cover n <= N).
    """
    _check_positive("k", k)
    _check_positive("N", N)
    if isinstance(x, PiMultiple):
        if abs(x.factor) > 1:
            raise ValueError("x must lie in [-pi, pi]")
    else:
        x = Fraction(x)
        if abs(x) > pi_ball(64).upper:
            raise ValueError("x must lie in [-pi, pi]")
    coeffs = coefficients if coefficients is not None else fourier_coefficients(k, N)
    if coeffs.n_max < N:
        raise ValueError(f"coefficient table covers n <= {coeffs.n_max}, need {N}")
    wp = precision_bits + GUARD_BITS + N.bit_length()
    total = pi_poly_eval(coeffs.a0, wp)
    for n in range(1, N + 1):
        a = coeffs.a_n(n)
        if a.is_zero():
            continue
        total = total + pi_poly_eval(a, wp) * _cos_ball(n, x, wp)
    return total.with_precision(precision_bits)
