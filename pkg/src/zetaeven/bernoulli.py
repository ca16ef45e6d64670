"""Bernoulli numbers in both sign conventions, and Bernoulli polynomials."""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction

from .exact_core import binomial

__all__ = [
    "BernoulliConvention",
    "PLUS",
    "MINUS",
    "RationalPolynomial",
    "bernoulli_number",
    "bernoulli_polynomial",
    "polynomial_eval",
    "polynomial_integrate",
    "polynomial_reflect",
    "polynomial_derivative",
]


class BernoulliConvention(enum.Enum):
    """Sign convention for B_1: ``PLUS`` gives +1/2, ``MINUS`` gives -1/2."""

    PLUS = "plus"
    MINUS = "minus"


PLUS = BernoulliConvention.PLUS
MINUS = BernoulliConvention.MINUS

_lock = threading.Lock()
_cache: list[Fraction] = [Fraction(1)]  # minus-convention values


def _extend(m: int) -> list[Fraction]:
    with _lock:
        table = list(_cache)
        for n in range(len(table), m + 1):
            if n >= 3 and n & 1:
                table.append(Fraction(0))
                continue
            # sum_{j=0}^{n} C(n+1, j) B_j = 0, solved for B_n.
            s = Fraction(0)
            for j in range(n):
                if table[j]:
                    s += binomial(n + 1, j) * table[j]
            table.append(-s / (n + 1))
        _publish(table)
    return table


def _publish(table: list[Fraction]) -> None:
    global _cache
    if len(table) > len(_cache):
        _cache = table


def bernoulli_number(m: int, convention: BernoulliConvention = MINUS) -> Fraction:
    """Return B_m exactly in the requested convention."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    table = _cache
    if m >= len(table):
        table = _extend(m)
    b = table[m]
    if m == 1 and BernoulliConvention(convention) is PLUS:
        return -b
    return b


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense polynomial over the rationals, constant term first.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple.
    """

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: RationalPolynomial) -> RationalPolynomial:
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return RationalPolynomial(
            tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))
        )

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: RationalPolynomial) -> RationalPolynomial:
        return self + (-other)

    def __mul__(self, other) -> RationalPolynomial:
        if isinstance(other, RationalPolynomial):
            if not self.coefficients or not other.coefficients:
                return RationalPolynomial()
            out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
            for i, a in enumerate(self.coefficients):
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
            return RationalPolynomial(tuple(out))
        s = Fraction(other)
        return RationalPolynomial(tuple(c * s for c in self.coefficients))

    __rmul__ = __mul__

    def derivative(self) -> RationalPolynomial:
        return RationalPolynomial(tuple(i * c for i, c in enumerate(self.coefficients) if i))

    def antiderivative(self) -> RationalPolynomial:
        """The antiderivative vanishing at 0."""
        return RationalPolynomial(
            (Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(self.coefficients))
        )

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            mag = abs(c)
            body = str(mag) if not mono else mono if mag == 1 else f"({mag}){mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def bernoulli_polynomial(n: int) -> RationalPolynomial:
    """B_n(x) = sum_k C(n, k) B_k^- x^(n-k)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = binomial(n, k) * bernoulli_number(k, MINUS)
    return RationalPolynomial(tuple(coeffs))


def polynomial_eval(p: RationalPolynomial, x) -> Fraction:
    return p(x)


def polynomial_derivative(p: RationalPolynomial) -> RationalPolynomial:
    return p.derivative()


def polynomial_integrate(p: RationalPolynomial, a, b) -> Fraction:
    """Exact integral of ``p`` over ``[a, b]``."""
    anti = p.antiderivative()
    return anti(b) - anti(a)


def polynomial_reflect(p: RationalPolynomial) -> RationalPolynomial:
    """Return q with q(x) = p(1 - x)."""
    out = [Fraction(0)] * len(p.coefficients)
    for j, c in enumerate(p.coefficients):
        if not c:
            continue
        # (1 - x)^j = sum_t C(j, t) (-x)^t
        for t in range(j + 1):
            term = binomial(j, t) * c
            out[t] += -term if t & 1 else term
    return RationalPolynomial(tuple(out))
