import math

import mpmath
import numpy as np
import pytest
from scipy import special

from nanoshell.errors import DomainError
from nanoshell.specfun import KummerCurve, confluent_u, confluent_u_pair, confluent_u_ratio, laguerre


def u_float(a, b, x):
    return confluent_u(a, b, x).to_float()


def test_laguerre_low_orders():
    assert laguerre(0, 3.7, -2.0) == 1.0
    assert laguerre(1, 1.0, 3.0) == -1.0


def test_laguerre_explicit_cubic():
    x = 1.5
    # L_3^(2)(x) = (x^3 - 15 x^2 + 60 x - 60) / (-6)
    want = (-(x**3) + 15 * x**2 - 60 * x + 60) / 6
    assert laguerre(3, 2.0, x) == pytest.approx(want, rel=1e-15)


def test_laguerre_against_scipy():
    for n in range(12):
        for alpha in (1.0, 3.0, 5.0):
            for x in (0.3, 4.0, 25.0):
                assert laguerre(n, alpha, x) == pytest.approx(special.eval_genlaguerre(n, alpha, x), rel=1e-12)


def test_u_polynomial_case():
    # U(-1, 2, x) = x - 2
    assert u_float(-1.0, 2, 3.0) == pytest.approx(1.0, rel=1e-12)
    assert u_float(-1.0, 2, 10.0) == pytest.approx(8.0, rel=1e-12)


@pytest.mark.parametrize("n", range(11))
@pytest.mark.parametrize("b", [2, 4, 6])
def test_laguerre_reduction(n, b):
    # U(-n, alpha + 1, x) = (-1)^n n! L_n^(alpha)(x)
    alpha = b - 1
    for x in (0.5, 2.7, 7.5, 30.0):
        lag = laguerre(n, alpha, x)
        # relative comparison is meaningless right at a zero of the polynomial
        assert abs(lag) > 1e-6 * special.binom(n + alpha, n)
        assert u_float(-n, b, x) == pytest.approx((-1) ** n * math.factorial(n) * lag, rel=1e-10)


def test_against_mpmath_negative_noninteger_a():
    # the regime met by bound states: a = l + 1 - 1/xi in [-12, 0]
    got = u_float(-9.0, 2, 20.0)
    assert got == pytest.approx(float(mpmath.hyperu(-9.0, 2, 20.0)), rel=1e-9)
    for a in (-11.7, -6.25, -3.5, -0.4, 0.5, 2.3):
        for b in (2, 3, 5, 7):
            for x in (0.5, 3.0, 20.0, 60.0):
                want = float(mpmath.hyperu(a, b, x))
                assert u_float(a, b, x) == pytest.approx(want, rel=1e-9), (a, b, x)


def test_scaled_value_survives_overflow():
    # U(-12.3, 2, 2000) ~ 2000^12.3 is fine; at x = 1e-3 and b = 7 the value is ~1e18
    ev = confluent_u(-12.3, 7, 1e-3)
    want = mpmath.hyperu(-12.3, 7, mpmath.mpf("1e-3"))
    assert ev.log_abs() == pytest.approx(float(mpmath.log(abs(want))), rel=1e-10)
    assert ev.sign == (1 if want > 0 else -1)


def test_small_x_power_law():
    x = 1e-4
    want = math.gamma(3) / math.gamma(0.5) * x**-3
    assert u_float(0.5, 4, x) == pytest.approx(want, rel=1e-3)


def test_kummer_equation_residual():
    # U' = -a U(a+1, b+1) and U'' = a(a+1) U(a+2, b+2), evaluated separately
    for a in (-7.3, -2.6, 0.7):
        for b in (2, 4):
            for x in (1.0, 5.0, 17.0, 45.0):
                u = u_float(a, b, x)
                du = -a * u_float(a + 1, b + 1, x)
                d2u = a * (a + 1) * u_float(a + 2, b + 2, x)
                terms = (x * d2u, (b - x) * du, -a * u)
                scale = max(abs(t) for t in terms)
                assert abs(sum(terms)) / scale < 1e-8


def test_derivative_matches_contiguous_relation():
    u, du, s = KummerCurve(-4.4, 3, 2.0).evaluate(2.0)
    want = -(-4.4) * mpmath.hyperu(-3.4, 4, 2.0)
    assert du * math.exp(s) == pytest.approx(float(want), rel=1e-9)


def test_pair_shares_scale():
    u2, u3 = confluent_u_pair(-5.1, 2, 9.0)
    assert u2.log_scale == u3.log_scale
    assert u3.to_float() == pytest.approx(float(mpmath.hyperu(-5.1, 3, 9.0)), rel=1e-9)


def test_ratio_polynomial_case():
    # U(-1, 3, x) / U(-1, 2, x) = (x - 3) / (x - 2)
    assert confluent_u_ratio(-1.0, 0, 4.0) == pytest.approx(0.5, rel=1e-12)


def test_ratio_matches_quotient():
    a, l, x = -9.3, 1, 30.0
    num = confluent_u(a, 2 * l + 3, x)
    den = confluent_u(a, 2 * l + 2, x)
    quotient = num.value / den.value * math.exp(num.log_scale - den.log_scale)
    assert confluent_u_ratio(a, l, x) == pytest.approx(quotient, rel=1e-9)


def test_ratio_small_x_growth():
    # U(a, 3, x) ~ Gamma(2)/Gamma(a) x^-2 and U(a, 2, x) ~ Gamma(1)/Gamma(a) x^-1,
    # so the ratio grows like 1/x
    for x in (1e-3, 1e-4, 1e-5):
        assert x * confluent_u_ratio(0.5, 0, x) == pytest.approx(1.0, rel=0.02)


@pytest.mark.parametrize("x", [0.0, -1.0, math.inf])
def test_rejects_bad_argument(x):
    with pytest.raises(DomainError):
        confluent_u(-1.0, 2, x)


def test_curve_matches_pointwise_calls():
    curve = KummerCurve(-6.7, 2, 0.5)
    for x in np.linspace(0.5, 80.0, 37):
        u, _, s = curve.evaluate(float(x))
        assert u * math.exp(s) == pytest.approx(u_float(-6.7, 2, float(x)), rel=1e-10)
