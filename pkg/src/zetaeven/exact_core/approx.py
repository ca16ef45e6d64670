"""Ball arithmetic on binary floating values with rigorous error radii.

An :class:`ApproxReal` stores ``man * 2**exp`` together with a radius
``rad * 2**exp``. Every operation rounds its result to the working
precision and folds the exact rounding error into the radius, so the
represented real always lies in ``[value - radius, value + radius]``.
"""

from __future__ import annotations

import decimal
import functools
from fractions import Fraction
from numbers import Rational

__all__ = ["ApproxReal", "GUARD_BITS", "pi_ball"]

GUARD_BITS = 32


def _ceil_shift(x: int, d: int) -> int:
    """ceil(x / 2**d) for x >= 0."""
    return -((-x) >> d)


class ApproxReal:
    """A real number known to lie within ``radius`` of ``value``."""

    __slots__ = ("_man", "_rad", "_exp", "precision")

    def __init__(self, man: int, rad: int, exp: int, precision: int):
        if rad < 0:
            raise ValueError("radius must be non-negative")
        if precision < 2:
            raise ValueError("precision must be at least 2 bits")
        bits = max(abs(man).bit_length(), rad.bit_length())
        if bits > precision:
            d = bits - precision
            kept = man >> d
            rad = _ceil_shift(rad + (man - (kept << d)), d)
            man = kept
            exp += d
        if man == 0 and rad == 0:
            exp = 0
        self._man = man
        self._rad = rad
        self._exp = exp
        self.precision = precision

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, precision: int) -> ApproxReal:
        return cls(0, 0, 0, precision)

    @classmethod
    def from_rational(cls, q, precision: int, radius=0) -> ApproxReal:
        """Enclose the exact rational ``q`` (plus an optional radius)."""
        q = Fraction(q)
        p, d = q.numerator, q.denominator
        if p == 0:
            ball = cls.zero(precision)
        elif d & (d - 1) == 0 and abs(p).bit_length() <= precision:
            ball = cls(p, 0, -(d.bit_length() - 1), precision)
        else:
            s = precision + 2 - (abs(p).bit_length() - d.bit_length())
            num, den = (p << s, d) if s >= 0 else (p, d << -s)
            man, rem = divmod(num, den)
            ball = cls(man, 1 if rem else 0, -s, precision)
        if radius:
            ball = ball.widen(radius)
        return ball

    # -- views ---------------------------------------------------------------

    @property
    def value(self) -> Fraction:
        return _scaled(self._man, self._exp)

    @property
    def radius(self) -> Fraction:
        return _scaled(self._rad, self._exp)

    @property
    def lower(self) -> Fraction:
        return _scaled(self._man - self._rad, self._exp)

    @property
    def upper(self) -> Fraction:
        return _scaled(self._man + self._rad, self._exp)

    def abs_upper(self) -> Fraction:
        """An upper bound on the absolute value of the represented real."""
        return _scaled(abs(self._man) + self._rad, self._exp)

    def abs_lower(self) -> Fraction:
        """A lower bound on the absolute value of the represented real."""
        return _scaled(max(abs(self._man) - self._rad, 0), self._exp)

    def is_exact(self) -> bool:
        return self._rad == 0

    def __float__(self) -> float:
        return float(self.value)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> ApproxReal:
        if isinstance(other, ApproxReal):
            return other
        if isinstance(other, (int, Rational)):
            return ApproxReal.from_rational(other, self.precision)
        return NotImplemented

    def __neg__(self) -> ApproxReal:
        return ApproxReal(-self._man, self._rad, self._exp, self.precision)

    def __pos__(self) -> ApproxReal:
        return self

    def __add__(self, other) -> ApproxReal:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        e = min(self._exp, other._exp)
        s1, s2 = self._exp - e, other._exp - e
        return ApproxReal(
            (self._man << s1) + (other._man << s2),
            (self._rad << s1) + (other._rad << s2),
            e,
            max(self.precision, other.precision),
        )

    __radd__ = __add__

    def __sub__(self, other) -> ApproxReal:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> ApproxReal:
        return (-self) + other

    def __mul__(self, other) -> ApproxReal:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m1, r1, m2, r2 = self._man, self._rad, other._man, other._rad
        return ApproxReal(
            m1 * m2,
            abs(m1) * r2 + abs(m2) * r1 + r1 * r2,
            self._exp + other._exp,
            max(self.precision, other.precision),
        )

    __rmul__ = __mul__

    def __pow__(self, e: int) -> ApproxReal:
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = ApproxReal.from_rational(1, self.precision)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def widen(self, extra) -> ApproxReal:
        """Return the same ball with its radius increased by ``extra`` >= 0."""
        extra = Fraction(extra)
        if extra < 0:
            raise ValueError("extra radius must be non-negative")
        if extra == 0:
            return self
        up = ApproxReal.from_rational(extra, self.precision)
        return self + ApproxReal(0, abs(up._man) + up._rad, up._exp, self.precision)

    def with_precision(self, precision: int) -> ApproxReal:
        return ApproxReal(self._man, self._rad, self._exp, precision)

    # -- comparisons ---------------------------------------------------------

    def contains(self, x) -> bool:
        """Whether ``x`` (a rational or a whole ball) lies inside this ball."""
        if isinstance(x, ApproxReal):
            return self.lower <= x.lower and x.upper <= self.upper
        x = Fraction(x)
        return self.lower <= x <= self.upper

    def overlaps(self, other: ApproxReal) -> bool:
        return self.lower <= other.upper and other.lower <= self.upper

    # -- formatting ----------------------------------------------------------

    def to_decimal(self, digits: int | None = None) -> tuple[str, str]:
        """Decimal center with ``digits`` significant digits and a radius.

        ``digits`` defaults to the number of decimal digits the binary
        precision supports. The printed radius is rounded upward and covers the rounding of the
        printed center, so the printed interval still encloses the real.
        """
        if digits is None:
            digits = max(1, self.precision * 30103 // 100000)
        ctx = decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_EVEN)
        exact = self.value
        center = _fraction_to_decimal(exact, ctx)
        slack = abs(Fraction(center) - exact) + self.radius
        up = decimal.Context(prec=2, rounding=decimal.ROUND_CEILING)
        radius = _fraction_to_decimal(slack, up)
        if slack and Fraction(radius) < slack:
            radius = up.next_plus(radius)
        return _fmt(center), _fmt(radius)

    def __repr__(self) -> str:
        c, r = self.to_decimal()
        return f"ApproxReal({c} ± {r}, precision={self.precision})"


def _scaled(m: int, e: int) -> Fraction:
    return Fraction(m << e) if e >= 0 else Fraction(m, 1 << -e)


def _fraction_to_decimal(q: Fraction, ctx: decimal.Context) -> decimal.Decimal:
    if q == 0:
        return decimal.Decimal(0)
    # Scale so the integer quotient carries more digits than requested.
    p, d = q.numerator, q.denominator
    shift = ctx.prec + 4 - (len(str(abs(p))) - len(str(d)))
    if shift >= 0:
        num, den = p * 10**shift, d
    else:
        num, den = p, d * 10**-shift
    quo, rem = divmod(abs(num), den)
    # Sticky digit keeps directed rounding honest for the discarded tail.
    digits = quo * 10 + (1 if rem else 0)
    sign = 1 if num < 0 else 0
    raw = decimal.Decimal((sign, tuple(int(c) for c in str(digits)), -shift - 1))
    return ctx.plus(raw)


def _fmt(x: decimal.Decimal) -> str:
    return f"{x:e}" if x != 0 else "0"


# -- pi ---------------------------------------------------------------------


def _arctan_inverse(x: int, one: int) -> tuple[int, int]:
    """Fixed-point arctan(1/x) scaled by ``one``, plus an error bound in ulps."""
    x2 = x * x
    power = one // x
    total = 0
    j = 0
    while power:
        term = power // (2 * j + 1)
        total += -term if j & 1 else term
        power //= x2
        j += 1
    # Each floored power is off by < 2 ulps, each quotient by one more, and
    # the dropped alternating tail is below the last (zero) computed power + 2.
    return total, 3 * (j + 2)


@functools.lru_cache(maxsize=64)
def pi_ball(precision: int) -> ApproxReal:
    """Enclosure of pi via Machin's formula pi = 16 atan(1/5) - 4 atan(1/239)."""
    w = precision + GUARD_BITS
    one = 1 << w
    a, ea = _arctan_inverse(5, one)
    b, eb = _arctan_inverse(239, one)
    return ApproxReal(16 * a - 4 * b, 16 * ea + 4 * eb, -w, precision)
