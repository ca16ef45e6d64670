"""Composite Gauss-Legendre quadrature of the cosine moments x^(2k) cos(nx).

This is a numerical oracle: it shares nothing with the closed-form route
except the problem statement. Pi comes from mpmath, not from
:func:`zetaeven.exact_core.pi_ball`.
"""

from __future__ import annotations

import functools
from fractions import Fraction

import mpmath

from .exact_core import ApproxReal

__all__ = ["PrecisionUnreachable", "gauss_legendre", "cosine_moment_quadrature"]

# Successive-refinement differences are inflated by this factor.
SAFETY_FACTOR = 4
EXTRA_BITS = 64


class PrecisionUnreachable(RuntimeError):
    """The radius target was not met within the panel budget."""


def mpf_to_fraction(x) -> Fraction:
    # Read the raw tuple: re-wrapping with mpmath.mpf would round to mp.prec.
    sign, man, exp, _ = x._mpf_
    if not man and exp:
        raise ValueError(f"cannot convert non-finite value {x}")
    man = -int(man) if sign else int(man)
    return Fraction(man << exp) if exp >= 0 else Fraction(man, 1 << -exp)


@functools.lru_cache(maxsize=32)
def gauss_legendre(points: int, wp: int) -> tuple[tuple[object, object], ...]:
    """Nodes and weights on [-1, 1] at ``wp`` bits, by Newton iteration."""
    out = []
    with mpmath.workprec(wp + 16):
        eps = mpmath.ldexp(1, -wp)
        for i in range(1, points + 1):
            x = mpmath.cos(mpmath.pi * (i - mpmath.mpf(1) / 4) / (points + mpmath.mpf(1) / 2))
            for _ in range(200):
                p0, p1 = mpmath.mpf(1), x
                for j in range(2, points + 1):
                    p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
                dp = points * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x -= dx
                if abs(dx) < eps:
                    break
            else:
                raise PrecisionUnreachable("Gauss-Legendre nodes did not converge")
            out.append((x, 2 / ((1 - x * x) * dp * dp)))
    return tuple(out)


def _composite(f, a, b, panels: int, rule) -> object:
    h = (b - a) / panels
    half = h / 2
    total = mpmath.mpf(0)
    for p in range(panels):
        mid = a + (p + mpmath.mpf(1) / 2) * h
        total += half * mpmath.fsum(w * f(mid + half * x) for x, w in rule)
    return total


def cosine_moment_quadrature(
    n: int,
    k: int,
    precision_bits: int = 128,
    *,
    points: int = 20,
    max_panels: int = 4096,
) -> ApproxReal:
    """Enclose the integral of x^(2k) cos(nx) over [0, pi].

    Panel counts double until the inflated difference between successive
    estimates drops below one unit in the last requested place of the
    integrand's scale; that difference plus a rounding allowance becomes
    the radius.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    wp = precision_bits + EXTRA_BITS
    rule = gauss_legendre(points, wp)
    with mpmath.workprec(wp):
        pi = mpmath.pi
        bound = pi ** (2 * k + 1) / (2 * k + 1)  # integral of |f| is at most this
        target = mpmath.ldexp(max(bound, 1), -precision_bits)

        def f(x):
            return x ** (2 * k) * mpmath.cos(n * x)

        prev = _composite(f, 0, pi, 1, rule)
        panels = 2
        while True:
            cur = _composite(f, 0, pi, panels, rule)
            est = SAFETY_FACTOR * abs(cur - prev)
            if est <= target:
                break
            prev = cur
            panels *= 2
            if panels > max_panels:
                raise PrecisionUnreachable(
                    f"no convergence for n={n}, k={k} within {max_panels} panels"
                )
        # Each evaluation and accumulation may lose a few ulps of the scale.
        evals = panels * points
        rounding = (evals + points + 16) * pi ** (2 * k + 1) * mpmath.ldexp(1, 8 - wp)
        value = mpf_to_fraction(cur)
        radius = mpf_to_fraction(est) + mpf_to_fraction(rounding)
    ball = ApproxReal.from_rational(value, wp, radius=radius)
    return ball.with_precision(precision_bits)
