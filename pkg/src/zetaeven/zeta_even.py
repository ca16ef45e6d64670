"""zeta(2k) as an exact rational multiple of pi^(2k), by two independent routes.

The recurrence route solves

    sum_{i=1}^{k} C_i (-1)^(i-1) (2k)! / (2k-2i+1)! = k / (2k+1)

for C_k given C_1 .. C_{k-1}. The closed route uses Bernoulli numbers,
C_i = (-1)^(i+1) 2^(2i) B_{2i} / (2 (2i)!). Neither route calls the other.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import bernoulli as _bernoulli
from .exact_core import (
    GUARD_BITS,
    ApproxReal,
    PiPolynomial,
    factorial,
    falling_factorial,
    pi_poly_eval,
)
from .report import IdentityReport, IdentityViolation

__all__ = [
    "ZetaEvenValue",
    "zeta_even_closed",
    "zeta_even_recurrence",
    "zeta_even_numeric",
    "verify_lemma15",
]

BernoulliSource = Callable[[int, _bernoulli.BernoulliConvention], Fraction]


@dataclass(frozen=True)
class ZetaEvenValue:
    """zeta(2k) = coefficient * pi^(2k)."""

    k: int
    coefficient: Fraction

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.coefficient <= 0:
            raise ValueError(f"zeta(2k) coefficient must be positive, got {self.coefficient}")

    def as_pi_polynomial(self) -> PiPolynomial:
        return PiPolynomial.monomial(self.coefficient, 2 * self.k)

    def evaluate(self, precision_bits: int = 128) -> ApproxReal:
        return pi_poly_eval(self.as_pi_polynomial(), precision_bits)

    def __str__(self) -> str:
        return f"ζ({2 * self.k}) = {self.coefficient}·π^{2 * self.k}"


def _check_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


def zeta_even_closed(i: int, bernoulli: BernoulliSource | None = None) -> ZetaEvenValue:
    """Coefficient of pi^(2i) in zeta(2i) from the Bernoulli closed form.

    ``bernoulli`` overrides the Bernoulli-number source, which lets tests
    inject a faulty table.
    """
    _check_positive("i", i)
    return ZetaEvenValue(i, _closed_coefficient(i, bernoulli))


_lock = threading.Lock()
_coefficients: list[Fraction] = []  # C_1, C_2, ... from the recurrence


def _solve_next(known: list[Fraction]) -> Fraction:
    k = len(known) + 1
    acc = Fraction(k, 2 * k + 1)
    for i, c in enumerate(known, start=1):
        # (2k)! / (2k - 2i + 1)! as a falling product of length 2i - 1
        term = c * falling_factorial(2 * k, 2 * i - 1)
        acc -= term if i % 2 else -term
    # The i = k term has weight (-1)^(k-1) (2k)! / 1!.
    c_k = acc / factorial(2 * k)
    return c_k if k % 2 else -c_k


def zeta_even_recurrence(k: int) -> ZetaEvenValue:
    """Coefficient of pi^(2k) in zeta(2k), solved incrementally from the
    Fourier-derived summation identity. Earlier coefficients are memoized."""
    _check_positive("k", k)
    global _coefficients
    table = _coefficients
    if k > len(table):
        with _lock:
            table = list(_coefficients)
            while len(table) < k:
                table.append(_solve_next(table))
            if len(table) > len(_coefficients):
                _coefficients = table
    return ZetaEvenValue(k, table[k - 1])


def zeta_even_numeric(k: int, N: int, precision_bits: int = 128) -> ApproxReal:
    """Bracket zeta(2k) from its defining series.

    The partial sum over n <= N is computed in ball arithmetic; the tail is
    enclosed by the integral test between (N+1)^(1-2k)/(2k-1) and
    N^(1-2k)/(2k-1).
    """
    _check_positive("k", k)
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    wp = precision_bits + GUARD_BITS + N.bit_length()
    s = ApproxReal.zero(wp)
    p = 2 * k
    for n in range(1, N + 1):
        s = s + ApproxReal.from_rational(Fraction(1, n**p), wp)
    lo = Fraction(1, (2 * k - 1) * (N + 1) ** (p - 1))
    hi = Fraction(1, (2 * k - 1) * N ** (p - 1))
    tail = ApproxReal.from_rational((lo + hi) / 2, wp, radius=(hi - lo) / 2)
    return (s + tail).with_precision(precision_bits)


def verify_lemma15(k_max: int, bernoulli: BernoulliSource | None = None) -> IdentityReport:
    """Check recurrence and closed-form coefficients agree for every k <= k_max.

    Raises :class:`IdentityViolation` at the first disagreement.
    """
    _check_positive("k_max", k_max)
    for k in range(1, k_max + 1):
        rec = zeta_even_recurrence(k).coefficient
        closed = _closed_coefficient(k, bernoulli)
        if rec != closed:
            raise IdentityViolation("lemma15", k, rec, closed)
    return IdentityReport("lemma15", (1, k_max), None, k_max)


def _closed_coefficient(k: int, bernoulli: BernoulliSource | None) -> Fraction:
    # A corrupted Bernoulli source may give a non-positive value; report it
    # as a mismatch instead of tripping the ZetaEvenValue invariant.
    source = bernoulli or _bernoulli.bernoulli_number
    b = source(2 * k, _bernoulli.MINUS)
    sign = 1 if k % 2 else -1
    return sign * Fraction(4**k) * b / (2 * factorial(2 * k))
