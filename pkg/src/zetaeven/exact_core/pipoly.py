"""Exact polynomials in pi with rational coefficients."""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Mapping

from .approx import GUARD_BITS, ApproxReal, pi_ball

__all__ = [
    "DivisionExponentUnderflow",
    "PiPolynomial",
    "pi_poly_add",
    "pi_poly_scale",
    "pi_poly_divide",
    "pi_poly_eval",
    "pi_power",
]


class DivisionExponentUnderflow(ArithmeticError):
    """Dividing by a power of pi would leave a negative exponent."""


class PiPolynomial:
    """An immutable finite sum ``sum(c_e * pi**e)`` with rational ``c_e``.

    Zero coefficients are never stored, so two instances are equal exactly
    when they denote the same real number (pi is transcendental).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for e, c in items:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"pi exponents must be non-negative ints, got {e!r}")
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))

    @classmethod
    def monomial(cls, coefficient, exponent: int) -> PiPolynomial:
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c) -> PiPolynomial:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> tuple[tuple[int, Fraction], ...]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        return self._terms

    def coefficient(self, exponent: int) -> Fraction:
        return dict(self._terms).get(exponent, Fraction(0))

    def exponents(self) -> list[int]:
        return [e for e, _ in self._terms]

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int | None:
        return self._terms[-1][0] if self._terms else None

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, PiPolynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __add__(self, other: PiPolynomial) -> PiPolynomial:
        if not isinstance(other, PiPolynomial):
            return NotImplemented
        return PiPolynomial(self._terms + other._terms)

    def __neg__(self) -> PiPolynomial:
        return PiPolynomial((e, -c) for e, c in self._terms)

    def __sub__(self, other: PiPolynomial) -> PiPolynomial:
        if not isinstance(other, PiPolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, s=1, pi_shift: int = 0) -> PiPolynomial:
        """Multiply by the rational ``s`` and by ``pi**pi_shift``."""
        if pi_shift < 0:
            raise ValueError("pi_shift must be non-negative; use divide_by_pi")
        s = Fraction(s)
        return PiPolynomial((e + pi_shift, c * s) for e, c in self._terms)

    def divide_by_pi(self, e: int) -> PiPolynomial:
        if e < 0:
            raise ValueError("exponent must be non-negative")
        if self._terms and self._terms[0][0] < e:
            raise DivisionExponentUnderflow(
                f"cannot divide pi^{self._terms[0][0]} term by pi^{e}"
            )
        return PiPolynomial((x - e, c) for x, c in self._terms)

    def __mul__(self, s) -> PiPolynomial:
        if isinstance(s, PiPolynomial):
            acc: list[tuple[int, Fraction]] = []
            for e1, c1 in self._terms:
                for e2, c2 in s._terms:
                    acc.append((e1 + e2, c1 * c2))
            return PiPolynomial(acc)
        if isinstance(s, (int, Fraction)):
            return self.scale(s)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"PiPolynomial({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            mag = abs(c)
            pi = "π" if e == 1 else f"π^{e}"
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = pi
            elif mag.denominator == 1:
                body = f"{mag}·{pi}"
            else:
                body = f"({mag})·{pi}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def pi_poly_add(a: PiPolynomial, b: PiPolynomial) -> PiPolynomial:
    return a + b


def pi_poly_scale(a: PiPolynomial, s, pi_shift: int = 0) -> PiPolynomial:
    return a.scale(s, pi_shift)


def pi_poly_divide(a: PiPolynomial, e: int) -> PiPolynomial:
    """Divide by ``pi**e``; raises :class:`DivisionExponentUnderflow` on underflow."""
    return a.divide_by_pi(e)


def pi_poly_eval(a: PiPolynomial, precision_bits: int) -> ApproxReal:
    """Enclose the real value of ``a`` at the given working precision."""
    if precision_bits < 16:
        raise ValueError("precision_bits must be at least 16")
    if a.is_zero():
        return ApproxReal.zero(precision_bits)
    wp = precision_bits + GUARD_BITS + (a.degree or 0).bit_length()
    total = ApproxReal.zero(wp)
    for e, c in a.items():
        total = total + pi_power(e, wp) * ApproxReal.from_rational(c, wp)
    return total.with_precision(precision_bits)


@functools.lru_cache(maxsize=1024)
def pi_power(e: int, precision: int) -> ApproxReal:
    """Enclosure of pi**e at the given precision."""
    if e == 0:
        return ApproxReal.from_rational(1, precision)
    if e == 1:
        return pi_ball(precision)
    half = pi_power(e // 2, precision)
    sq = half * half
    return sq * pi_ball(precision) if e & 1 else sq
