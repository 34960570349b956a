import math

import mpmath
import numpy as np
import pytest

from nanoshell.errors import PoleError
from nanoshell.specfun import ln_gamma


def test_factorial():
    assert ln_gamma(5.0) == (pytest.approx(math.log(24.0), rel=1e-15), 1)


def test_half_integer():
    val, sign = ln_gamma(0.5)
    assert val == pytest.approx(0.5 * math.log(math.pi), rel=1e-15)
    assert sign == 1


@pytest.mark.parametrize("x", [0.0, -1.0, -2.0, -7.0])
def test_poles(x):
    with pytest.raises(PoleError):
        ln_gamma(x)


def test_against_mpmath_on_both_sides_of_zero():
    for x in np.concatenate((np.linspace(-9.9, -0.1, 97), np.geomspace(1e-3, 170, 50))):
        if abs(x - round(x)) < 1e-9:
            continue
        val, sign = ln_gamma(float(x))
        g = mpmath.gamma(x)
        assert sign == (1 if g > 0 else -1)
        assert val == pytest.approx(float(mpmath.log(abs(g))), rel=1e-13, abs=1e-13)
