from dataclasses import replace
from fractions import Fraction

import mpmath
import pytest

from oracles import mp_to_fraction, pi_power_reference
from zetaeven.exact_core import PiPolynomial, pi_poly_eval
from zetaeven.fourier import (
    PiMultiple,
    PrecisionUnreachable,
    fourier_coefficients,
    fourier_I_closed,
    fourier_I_quadrature,
    lemma11_error,
    lemma11_partial_sum,
    lemma11_target,
    quadrature_agrees,
    reconstruct_at,
)


def _mpmath_moment(n, k, bits=200):
    # independent adaptive oracle (tanh-sinh), used only to pin examples
    with mpmath.workprec(bits):
        return mp_to_fraction(mpmath.quad(lambda x: x ** (2 * k) * mpmath.cos(n * x), [0, mpmath.pi]))


@pytest.mark.parametrize(
    "n, k, expected",
    [
        (1, 1, PiPolynomial({1: -2})),
        (2, 1, PiPolynomial({1: Fraction(1, 2)})),
        (1, 2, PiPolynomial({3: -4, 1: 24})),
    ],
)
def test_closed_form_examples(n, k, expected):
    assert fourier_I_closed(n, k) == expected
    ball = pi_poly_eval(expected, 256)
    assert abs(ball.value - _mpmath_moment(n, k)) < Fraction(1, 10**50)


def test_basel_coefficient_relation():
    # a_n = 4(-1)^n / n^2 for x^2 means I(n, 1) = 2 pi (-1)^n / n^2
    for n in range(1, 30):
        assert fourier_I_closed(n, 1) == PiPolynomial({1: Fraction(2 * (-1) ** n, n * n)})


def test_parity_and_sign_structure():
    for k in range(1, 8):
        for n in range(1, 15):
            p = fourier_I_closed(n, k)
            assert len(p) == k
            assert p.exponents() == list(range(1, 2 * k, 2))
            assert p.degree == 2 * k - 1
            assert p.coefficient(2 * k - 1) == Fraction((-1) ** n * 2 * k, n * n)


def test_quadrature_examples():
    for n, k in [(1, 1), (2, 1), (5, 3)]:
        quad = fourier_I_quadrature(n, k, 128)
        assert quad.contains(pi_poly_eval(fourier_I_closed(n, k), 192))
        assert quad.radius <= Fraction(1, 10**20)
    assert abs(float(fourier_I_quadrature(1, 1, 64)) + 6.2831853) < 1e-6


@pytest.mark.parametrize("k", [1, 3, 5])
def test_quadrature_agrees_sample(k):
    for n in (1, 4, 11, 20):
        ok, quad, closed = quadrature_agrees(n, k, 128)
        assert ok, (n, k, quad, closed)


def test_quadrature_budget_exhaustion():
    with pytest.raises(PrecisionUnreachable):
        fourier_I_quadrature(20, 5, 128, max_panels=2)


def test_coefficients_k1():
    coeffs = fourier_coefficients(1, 10)
    assert coeffs.a0 == PiPolynomial({2: Fraction(1, 3)})
    for n in range(1, 11):
        assert coeffs.a_n(n) == PiPolynomial({0: Fraction(4 * (-1) ** n, n * n)})
        assert coeffs.b_n(n).is_zero()


def test_coefficients_k2():
    coeffs = fourier_coefficients(2, 3)
    assert coeffs.a0 == PiPolynomial({4: Fraction(1, 5)})
    assert coeffs.a_n(1) == PiPolynomial({2: -8, 0: 48})
    assert all(coeffs.b_n(n).is_zero() for n in range(1, 4))
    with pytest.raises(IndexError):
        coeffs.a_n(4)


def test_partial_sum_examples():
    assert lemma11_partial_sum(1, 1) == PiPolynomial({1: 2})
    assert lemma11_partial_sum(1, 2) == PiPolynomial({1: Fraction(5, 2)})
    assert lemma11_target(1) == PiPolynomial({3: Fraction(1, 3)})


def test_partial_sum_matches_naive_sum():
    for k in range(1, 5):
        acc = PiPolynomial()
        for N in range(1, 31):
            acc = acc + fourier_I_closed(N, k).scale((-1) ** N)
            assert lemma11_partial_sum(k, N) == acc


def test_lemma11_error_shrinks():
    for k in range(1, 5):
        assert lemma11_error(k, 2000).abs_upper() < lemma11_error(k, 100).abs_lower()


def test_lemma11_error_is_eventually_decreasing():
    for k in (1, 2, 3):
        errs = [lemma11_error(k, N) for N in range(50, 400, 50)]
        assert all(b.abs_upper() < a.abs_lower() for a, b in zip(errs, errs[1:]))


def test_lemma11_error_threshold():
    pi_upper = Fraction(22, 7)
    for k in range(1, 5):
        bound = Fraction(10 * 2 * k) * pi_upper ** (2 * k - 1) / 10**4
        assert lemma11_error(k, 10**4).abs_upper() <= bound


def test_lemma11_error_matches_leading_tail():
    # the tail is dominated by 2k pi^(2k-1) / N
    err = float(lemma11_error(1, 1000))
    assert abs(err + 2 * 3.141592653589793 / 1000) < 1e-5


def test_reconstruct_at_zero():
    r = reconstruct_at(1, PiMultiple(0), 1000)
    assert r.abs_upper() < Fraction(1, 10**3)
    r_rational = reconstruct_at(1, Fraction(0), 1000)
    assert r_rational.overlaps(r)


def test_reconstruct_with_zero_coefficients():
    for k in (1, 3):
        coeffs = fourier_coefficients(k, 20)
        zeroed = replace(coeffs, a=(PiPolynomial(),) * 20)
        r = reconstruct_at(k, PiMultiple(Fraction(1, 3)), 20, coefficients=zeroed)
        expected = pi_poly_eval(PiPolynomial({2 * k: Fraction(1, 2 * k + 1)}), 128)
        assert r.value == expected.value


def test_reconstruct_at_pi_converges():
    for k in (1, 2):
        target = pi_poly_eval(PiPolynomial({2 * k: 1}), 160)
        errors = []
        N = 100
        while N <= 10**4:
            errors.append(reconstruct_at(k, PiMultiple(1), N) - target)
            N *= 2
        assert all(b.abs_upper() < a.abs_lower() for a, b in zip(errors, errors[1:]))


def test_reconstruct_at_pi_k1_accuracy():
    r = reconstruct_at(1, PiMultiple(1), 1000)
    assert abs(r.value - pi_power_reference(2)) < Fraction(1, 100)


def test_reconstruct_at_interior_points():
    assert reconstruct_at(1, Fraction(1, 2), 1000).contains(Fraction(1, 4)) is False
    assert abs(float(reconstruct_at(1, Fraction(1, 2), 1000)) - 0.25) < 1e-5
    third = reconstruct_at(2, PiMultiple(Fraction(1, 3)), 2000)
    assert abs(third.value - pi_power_reference(4) / 81) < Fraction(1, 10**3)


def test_reconstruct_domain_checks():
    with pytest.raises(ValueError):
        reconstruct_at(1, Fraction(4), 10)
    with pytest.raises(ValueError):
        reconstruct_at(1, PiMultiple(Fraction(3, 2)), 10)
    with pytest.raises(ValueError):
        reconstruct_at(1, PiMultiple(1), 10, coefficients=fourier_coefficients(1, 5))
