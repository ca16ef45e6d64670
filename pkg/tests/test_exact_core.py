from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import factorial_product, pascal_row, pi_power_reference
from zetaeven.exact_core import (
    ApproxReal,
    DivisionExponentUnderflow,
    PiPolynomial,
    binomial,
    factorial,
    falling_factorial,
    pi_poly_add,
    pi_poly_divide,
    pi_poly_eval,
    pi_poly_scale,
)

small_rationals = st.fractions(min_value=-100, max_value=100, max_denominator=50)


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (6, factorial_product(6))])
def test_factorial_examples(n, expected):
    assert factorial(n) == expected


def test_factorial_matches_product_oracle():
    for n in range(0, 120):
        assert factorial(n) == factorial_product(n)
    assert factorial(400) == factorial_product(400)


def test_factorial_step_law():
    for n in range(0, 200):
        assert factorial(n + 1) == (n + 1) * factorial(n)


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


@pytest.mark.parametrize("n, r, expected", [(5, 0, 1), (5, 6, 0), (4, 2, pascal_row(4)[2])])
def test_binomial_examples(n, r, expected):
    assert binomial(n, r) == expected


def test_binomial_pascal_recurrence():
    for n in range(1, 61):
        for r in range(1, n + 1):
            assert binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r)


def test_binomial_matches_pascal_rows():
    for n in range(0, 40):
        assert [binomial(n, r) for r in range(n + 1)] == pascal_row(n)


def test_falling_factorial():
    assert falling_factorial(4, 3) == 24
    assert falling_factorial(10, 0) == 1
    assert falling_factorial(3, 5) == 0
    for n in range(12):
        for j in range(n + 1):
            assert falling_factorial(n, j) == factorial(n) // factorial(n - j)


# -- rational field laws (Fraction carrier) -------------------------------------


@given(small_rationals, small_rationals, small_rationals)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0


@given(small_rationals, small_rationals)
def test_rational_canonical_form(a, b):
    from math import gcd

    for q in (a + b, a * b, a - b):
        assert q.denominator > 0
        assert gcd(abs(q.numerator), q.denominator) == 1
    assert Fraction(0, 7) == Fraction(0, 1) and Fraction(0, 7).denominator == 1


# -- PiPolynomial ----------------------------------------------------------------


def test_add_additive_inverse():
    two_pi = PiPolynomial({1: 2})
    assert pi_poly_add(two_pi, PiPolynomial({1: -2})).is_zero()


def test_add_like_terms():
    assert pi_poly_add(PiPolynomial({2: Fraction(1, 3)}), PiPolynomial({2: Fraction(2, 3)})) == PiPolynomial({2: 1})


def test_add_fourier_values():
    i11 = PiPolynomial({1: -2})
    i21 = PiPolynomial({1: Fraction(1, 2)})
    assert pi_poly_add(i11, i21) == PiPolynomial({1: Fraction(-3, 2)})


def test_scale_examples():
    assert pi_poly_scale(PiPolynomial({2: 1}), Fraction(1, 3), 0) == PiPolynomial({2: Fraction(1, 3)})
    assert pi_poly_scale(PiPolynomial(), Fraction(7, 2), 5).is_zero()
    assert pi_poly_scale(PiPolynomial({1: 1}), 0, 3).is_zero()


def test_divide_by_pi():
    k = 1
    lhs = PiPolynomial({2 * k + 1: Fraction(k, 2 * k + 1)})
    assert pi_poly_divide(lhs, 1) == PiPolynomial({2: Fraction(1, 3)})


def test_divide_underflow_is_an_error():
    with pytest.raises(DivisionExponentUnderflow):
        pi_poly_divide(PiPolynomial({0: 1, 3: 1}), 1)


def test_no_zero_coefficients_stored():
    p = PiPolynomial({0: 0, 1: 3, 2: 0})
    assert p.items() == ((1, Fraction(3)),)


@given(
    st.dictionaries(st.integers(0, 8), small_rationals, max_size=5),
    st.dictionaries(st.integers(0, 8), small_rationals, max_size=5),
)
def test_pi_poly_structural_invariants(ta, tb):
    a, b = PiPolynomial(ta), PiPolynomial(tb)
    for p in (a + b, a - b, a.scale(Fraction(2, 3), 2)):
        assert all(c != 0 for _, c in p.items())
    assert (a + b) - b == a
    assert a + b == b + a


def test_pi_poly_str():
    assert str(PiPolynomial({3: -4, 1: 24})) == "-4·π^3 + 24·π"
    assert str(PiPolynomial({1: Fraction(1, 2)})) == "(1/2)·π"
    assert str(PiPolynomial()) == "0"


# -- evaluation and balls ----------------------------------------------------------


def test_eval_zero_polynomial_is_exact_zero():
    z = pi_poly_eval(PiPolynomial(), 64)
    assert z.value == 0 and z.radius == 0


@pytest.mark.parametrize("bits", [16, 32, 64, 128, 256, 512])
@pytest.mark.parametrize("e", [1, 2, 3, 7])
def test_eval_contains_reference_powers(bits, e):
    ball = pi_poly_eval(PiPolynomial({e: 1}), bits)
    assert ball.contains(pi_power_reference(e, bits + 200))
    # the enclosure is tight relative to the working precision
    assert ball.radius < Fraction(abs(ball.value)) / 2 ** (bits - 4)


def test_eval_pi_squared_at_64_bits():
    ball = pi_poly_eval(PiPolynomial({2: 1}), 64)
    assert abs(float(ball) - 9.869604401089358) < 1e-12
    assert ball.contains(pi_power_reference(2))


def test_eval_precision_floor():
    with pytest.raises(ValueError):
        pi_poly_eval(PiPolynomial({1: 1}), 8)


def test_eval_mixed_polynomial():
    p = PiPolynomial({3: -4, 1: 24})
    ref = -4 * pi_power_reference(3) + 24 * pi_power_reference(1)
    assert pi_poly_eval(p, 128).contains(ref)


@given(small_rationals, small_rationals)
def test_ball_arithmetic_encloses_exact_results(a, b):
    A = ApproxReal.from_rational(a, 24)
    B = ApproxReal.from_rational(b, 24)
    assert A.contains(a) and B.contains(b)
    assert (A + B).contains(a + b)
    assert (A - B).contains(a - b)
    assert (A * B).contains(a * b)


def test_ball_widen_keeps_resolution():
    half = ApproxReal.from_rational(Fraction(1, 2), 160)
    wide = half.widen(Fraction(1, 2**150))
    assert wide.radius <= Fraction(1, 2**149)
    assert wide.contains(Fraction(1, 2) + Fraction(1, 2**150))


def test_to_decimal_encloses():
    ball = pi_poly_eval(PiPolynomial({1: 1}), 128)
    center, radius = ball.to_decimal(10)
    lo = Fraction(center) - Fraction(radius)
    hi = Fraction(center) + Fraction(radius)
    assert lo <= ball.lower and ball.upper <= hi
