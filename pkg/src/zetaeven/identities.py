"""Exact checks of the Bernoulli sum identities used to derive zeta(2k).

Each ``verify_*`` function returns both sides of one instance as exact
rationals; :func:`run_suite` sweeps a range and reports the first failure.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable

from .bernoulli import PLUS, BernoulliConvention, bernoulli_number
from .exact_core import binomial
from .report import FirstFailure, IdentityInstance, IdentityReport
from . import zeta_even

__all__ = [
    "OddArgument",
    "SUITES",
    "verify_lemma14",
    "verify_eq11",
    "verify_eq12",
    "remarks_sum",
    "run_suite",
]

BernoulliSource = Callable[[int, BernoulliConvention], Fraction]


class OddArgument(ValueError):
    """The half-interval Bernoulli sum is only claimed for even m."""


def _source(bernoulli: BernoulliSource | None) -> BernoulliSource:
    return bernoulli or bernoulli_number


def verify_lemma14(k: int, bernoulli: BernoulliSource | None = None) -> IdentityInstance:
    """sum_{i=1}^{k} 2^(2i) B_{2i} C(2k, 2i) / (2k-2i+1)  vs  2k/(2k+1)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    b = _source(bernoulli)
    lhs = Fraction(0)
    for i in range(1, k + 1):
        lhs += Fraction(4**i * binomial(2 * k, 2 * i), 2 * k - 2 * i + 1) * b(2 * i, PLUS)
    return IdentityInstance(lhs, Fraction(2 * k, 2 * k + 1))


def verify_eq11(m: int, bernoulli: BernoulliSource | None = None) -> IdentityInstance:
    """sum_{i=1}^{m} 2^i B_i^+ C(m, i) / (m-i+1)  vs  (2m+1)/(m+1), for even m."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if m % 2:
        raise OddArgument(f"m must be even, got {m}")
    b = _source(bernoulli)
    lhs = Fraction(0)
    for i in range(1, m + 1):
        lhs += Fraction(2**i * binomial(m, i), m - i + 1) * b(i, PLUS)
    return IdentityInstance(lhs, Fraction(2 * m + 1, m + 1))


def verify_eq12(k: int, bernoulli: BernoulliSource | None = None) -> IdentityInstance:
    """sum_{i=1}^{2k} 2^i B_i^+ C(2k+1, i)  vs  4k+1."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    b = _source(bernoulli)
    lhs = Fraction(0)
    for i in range(1, 2 * k + 1):
        lhs += 2**i * binomial(2 * k + 1, i) * b(i, PLUS)
    return IdentityInstance(lhs, Fraction(4 * k + 1))


def remarks_sum(
    x: int,
    k: int,
    convention: BernoulliConvention = PLUS,
    bernoulli: BernoulliSource | None = None,
) -> Fraction:
    """sum_{i=1}^{2kx} x^i B_i C(2kx+1, i), read literally.

    No closed form is asserted. Only the i = 1 term depends on the
    convention.
    """
    if x < 1 or k < 1:
        raise ValueError("x and k must be positive")
    b = _source(bernoulli)
    top = 2 * k * x
    total = Fraction(0)
    for i in range(1, top + 1):
        total += x**i * binomial(top + 1, i) * b(i, convention)
    return total


def _lemma15_instance(k: int, bernoulli: BernoulliSource | None = None) -> IdentityInstance:
    rec = zeta_even.zeta_even_recurrence(k).coefficient
    return IdentityInstance(rec, zeta_even._closed_coefficient(k, bernoulli))


def _indices_eq11(max_index: int) -> range:
    return range(2, max_index + 1, 2)


SUITES: dict[str, tuple[Callable[[int], IdentityInstance], Callable[[int], Iterable[int]]]] = {
    "lemma14": (verify_lemma14, lambda n: range(1, n + 1)),
    "eq11": (verify_eq11, _indices_eq11),
    "eq12": (verify_eq12, lambda n: range(1, n + 1)),
    "lemma15": (_lemma15_instance, lambda n: range(1, n + 1)),
}


def _run_one(args: tuple[str, int]) -> tuple[int, IdentityInstance]:
    name, index = args
    return index, SUITES[name][0](index)


def run_suite(name: str, max_index: int, jobs: int = 1) -> IdentityReport:
    """Check suite ``name`` at every index up to ``max_index``.

    With ``jobs > 1`` indices are spread over worker processes; the report
    is the same as a serial run.
    """
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if max_index < 1:
        raise ValueError(f"max_index must be >= 1, got {max_index}")
    check, indices = SUITES[name]
    idx = list(indices(max_index))
    lo = idx[0] if idx else max_index + 1
    if jobs > 1 and len(idx) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, [(name, i) for i in idx], chunksize=8))
    else:
        results = ((i, check(i)) for i in idx)
    for done, (i, inst) in enumerate(results, start=1):
        if not inst.holds:
            return IdentityReport(name, (lo, max_index), FirstFailure(i, inst.lhs, inst.rhs), done)
    return IdentityReport(name, (lo, max_index), None, len(idx))
