"""Spherical Bessel functions of the first kind and the k_l log-derivative.

``j_l`` is computed by a power series for small arguments and by Miller's
downward recurrence otherwise, normalised against whichever of the closed
forms ``j_0``/``j_1`` is larger in magnitude.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from ..errors import DomainError
from . import _num

_SERIES_MAX_X = 1.0
_RESCALE = 1e200
# Ratio results closer than this to a zero of j_l carry the pole flag.
POLE_DISTANCE = 2e-8


class BesselRatio(NamedTuple):
    """Result of :func:`spherical_bessel_ratio`.

    ``value`` is ``j_{l+1}(x)/j_l(x)``; when ``pole`` is set ``x`` sits within
    ``POLE_DISTANCE`` of a zero of ``j_l`` and ``value`` is not to be trusted.
    """

    value: float
    pole: bool


def _series(l: int, x: float) -> float:
    # j_l(x) = x^l/(2l+1)!! * sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))
    lead = 1.0
    for k in range(1, l + 1):
        lead *= x / (2 * k + 1)
    term = 1.0
    total = 1.0
    y = -0.5 * x * x
    k = 0
    tol = _num.eps(x)
    while abs(term) > tol * abs(total):
        k += 1
        term *= y / (k * (2 * l + 2 * k + 1))
        total += term
    return lead * total


def _miller_pair(l: int, x: float) -> tuple[float, float]:
    """(j_l, j_{l+1}) by downward recurrence from well above max(l, x)."""
    start = int(max(l + 1, x) + 20 + 4 * x ** (1.0 / 3.0))
    keep = [0.0] * (l + 2)  # f_0 .. f_{l+1}
    f_hi, f = 0.0, 1e-300
    for n in range(start, 0, -1):
        # f_{n-1} = (2n+1)/x f_n - f_{n+1}
        f_hi, f = f, (2 * n + 1) / x * f - f_hi
        if abs(f) > _RESCALE:
            f_hi /= _RESCALE
            f /= _RESCALE
            for i in range(n, l + 2):
                keep[i] /= _RESCALE
        if n - 1 <= l + 1:
            keep[n - 1] = f
    s, c = _num.sin(x), _num.cos(x)
    j0 = s / x
    j1 = s / (x * x) - c / x
    scale = j0 / keep[0] if abs(j0) >= abs(j1) else j1 / keep[1]
    return keep[l] * scale, keep[l + 1] * scale


def _pair(l: int, x: float) -> tuple[float, float]:
    if x <= _SERIES_MAX_X:
        return _series(l, x), _series(l + 1, x)
    return _miller_pair(l, x)


def _check(l, x):
    if l < 0 or int(l) != l:
        raise DomainError(f"order must be a non-negative integer, got {l}")
    if not x >= 0:
        raise DomainError(f"argument must be non-negative, got {x}")


def spherical_bessel_j(l: int, x: float) -> float:
    """Spherical Bessel function ``j_l(x)`` for integer ``l >= 0``, ``x >= 0``."""
    _check(l, x)
    l = int(l)
    if x == 0.0:
        return 1.0 if l == 0 else 0.0
    return _pair(l, x)[0]


def spherical_bessel_pair(l: int, x: float) -> tuple[float, float]:
    """``(j_l(x), j_{l+1}(x))`` from a single recurrence sweep."""
    _check(l, x)
    l = int(l)
    if x == 0.0:
        return (1.0 if l == 0 else 0.0), 0.0
    return _pair(l, x)


def spherical_bessel_ratio(l: int, x: float) -> BesselRatio:
    """Pole-aware ratio ``j_{l+1}(x)/j_l(x)``.

    Both functions come out of the same scaled recurrence sweep, so the ratio
    is never formed from independently rounded values.  The distance to the
    nearest zero of ``j_l`` is estimated as ``|j_l / j_l'|`` with
    ``j_l' = (l/x) j_l - j_{l+1}``.
    """
    _check(l, x)
    if x == 0.0:
        raise DomainError("ratio needs x > 0")
    jl, jl1 = _pair(int(l), x)
    slope = (l / x) * jl - jl1
    near = abs(jl) <= POLE_DISTANCE * abs(slope)
    value = jl1 / jl if jl != 0.0 else math.copysign(math.inf, jl1)
    return BesselRatio(value, near)


def spherical_hankel1_imag(l: int, t: float) -> float:
    """Real log-derivative ``d/dt ln h_l^(1)(i t)`` for ``t > 0``.

    Along the positive imaginary axis ``h_l^(1)(i t)`` is proportional to the
    modified spherical Bessel function ``k_l(t)``, so this equals
    ``k_l'(t)/k_l(t) = l/t - k_{l+1}(t)/k_l(t)``.  Upward recurrence is stable
    for ``k_l``; the common factor ``exp(-t)`` is dropped.
    """
    if t <= 0:
        raise DomainError(f"need t > 0, got {t}")
    if l < 0 or int(l) != l:
        raise DomainError(f"order must be a non-negative integer, got {l}")
    k_prev = 1.0 / t
    k_cur = (1.0 + 1.0 / t) / t
    for n in range(1, int(l) + 1):
        k_prev, k_cur = k_cur, k_prev + (2 * n + 1) / t * k_cur
    return l / t - k_cur / k_prev
