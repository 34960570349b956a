"""Tricomi's confluent hypergeometric function U(a, b, x) for real a, b and x > 0.

U is obtained by integrating Kummer's equation

    x U'' + (b - x) U' - a U = 0

inward from a large ``x_hi`` where the asymptotic series
``U ~ x^-a sum_k (a)_k (a-b+1)_k / k! (-x)^-k`` is accurate.  The second
solution grows like ``exp(x)``, so going inward it decays relative to U and
the integration is stable for every real ``a``, including the negative
non-integer values met for bound states.  Each step is a Taylor expansion of
the solution about the current node; the coefficients follow from the ODE by
a two-term recurrence, and the radius of convergence is the distance to the
singular point ``x = 0``.

Values carry a factored exponent (``log_scale``) because ``|U|`` spans many
decades between ``x_hi`` and small ``x``.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

from ..errors import ConvergenceError, DomainError
from . import _num

_TAYLOR_MAX_TERMS = 600


@dataclass(frozen=True)
class UEvaluation:
    """``U = value * exp(log_scale)``."""

    value: float
    log_scale: float = 0.0
    ok: bool = True

    def to_float(self) -> float:
        return self.value * math.exp(self.log_scale)

    @property
    def sign(self) -> int:
        return (self.value > 0) - (self.value < 0)

    def log_abs(self) -> float:
        return math.log(abs(self.value)) + self.log_scale


def default_x_hi(a: float, x: float) -> float:
    """Starting abscissa for the inward integration.

    At extended precision the start moves out far enough for the smallest
    asymptotic term to drop below the working epsilon.
    """
    return _num.like(max(2.0 * x, 50.0 + 10.0 * abs(a), 3.0 * _num.digits(a, x)), a, x)


def asymptotic_series(a: float, b: float, x: float) -> tuple[float, float]:
    """Return ``(s, ds)`` with ``U ~ x^-a s`` and ``U' ~ x^-a ds``.

    The Poincare series is summed up to its smallest term; a
    :class:`ConvergenceError` is raised if that term is not negligible.
    """
    term = 1.0
    s = 1.0
    ds = -a / x
    k = 0
    peak = abs(a) + abs(a - b + 1.0) + 2.0
    tol = 10 * _num.eps(a, b, x)
    while True:
        nxt = -term * (a + k) * (a - b + 1.0 + k) / ((k + 1) * x)
        if nxt == 0.0:
            return s, ds
        if abs(nxt) >= abs(term) and k > peak:
            break  # past the smallest term
        term = nxt
        k += 1
        s += term
        ds += term * (-a - k) / x
        if abs(term) < tol * abs(s):
            return s, ds
        if k > 4000:
            break
    raise ConvergenceError(
        f"asymptotic series for U({a}, {b}, {x}) stalls at relative term {abs(term / s):.2e}",
        method="asymptotic-series",
        residual=abs(term / s),
    )


def _taylor(a, b, x0, u, du, h):
    """Advance (U, U') from ``x0`` to ``x0 + h`` by the local Taylor series."""
    # With d_n = c_n h^n and U(x0 + t) = sum c_n t^n the ODE gives
    # x0 (n+2)(n+1) d_{n+2} = -(n+1)(n+b-x0) h d_{n+1} + (n+a) h^2 d_n
    tol = _num.eps(a, b, x0, u)
    d0 = u
    d1 = du * h
    val = d0 + d1
    der = d1
    scale = max(abs(d0), abs(d1))
    quiet = 0
    hh = h * h
    for n in range(_TAYLOR_MAX_TERMS):
        d2 = (-(n + 1) * (n + b - x0) * h * d1 + (n + a) * hh * d0) / (x0 * (n + 2) * (n + 1))
        val += d2
        der += (n + 2) * d2
        m = abs(d2)
        if m > scale:
            scale = m
        if m <= tol * scale:
            quiet += 1
            if quiet == 2:
                return val, der / h
        else:
            quiet = 0
        d0, d1 = d1, d2
    raise ConvergenceError(
        f"Taylor step x0={x0}, h={h} did not converge",
        method="kummer-taylor",
        residual=abs(d2) / scale,
    )


def _step_size(a, b, x0):
    kappa = _num.sqrt(max(abs(0.5 * b - a) / x0, 0.25))
    return min(0.4 * x0, 2.0 / kappa)


class KummerCurve:
    """U(a, b, x) tabulated on ``[x_lo, x_hi]`` by one inward sweep.

    The nodes keep (U, U') with a running log-scale; evaluating between nodes
    re-expands from the node above, so any point of the range costs a single
    Taylor sum.  Points beyond ``x_hi`` use the asymptotic series directly.
    """

    def __init__(self, a: float, b: float, x_lo: float, x_hi: float | None = None):
        if not (x_lo > 0 and _num.isfinite(x_lo)):
            raise DomainError(f"U needs x > 0, got {x_lo}")
        if not (_num.isfinite(a) and _num.isfinite(b)):
            raise DomainError("U needs finite parameters")
        self.a = a
        self.b = b
        x_hi = _num.like(max(default_x_hi(a, x_lo) if x_hi is None else x_hi, x_lo), a, b, x_lo)
        self.x_lo = x_lo
        self.x_hi = x_hi

        s, ds = asymptotic_series(a, b, x_hi)
        log_scale = -a * _num.log(x_hi) + _num.log(abs(s))
        u = _num.sign(s)
        du = ds / abs(s)
        xs, us, dus, logs = [x_hi], [u], [du], [log_scale]
        x0 = x_hi
        while x0 > x_lo:
            h = -min(_step_size(a, b, x0), x0 - x_lo)
            u, du = _taylor(a, b, x0, u, du, h)
            x0 = x0 + h
            if x0 - x_lo <= 1e-15 * x_lo:
                x0 = x_lo
            norm = max(abs(u), abs(du))
            if not (norm > 0 and _num.isfinite(norm)):
                raise ConvergenceError(
                    f"inward sweep for U({a}, {b}, .) broke down at x={x0}",
                    method="kummer-taylor",
                    residual=norm,
                )
            log_scale += _num.log(norm)
            u /= norm
            du /= norm
            xs.append(x0)
            us.append(u)
            dus.append(du)
            logs.append(log_scale)
        # ascending order for bisect
        self._x = xs[::-1]
        self._u = us[::-1]
        self._du = dus[::-1]
        self._log = logs[::-1]

    @property
    def n_nodes(self) -> int:
        return len(self._x)

    def evaluate(self, x: float) -> tuple[float, float, float]:
        """Return ``(u, du, log_scale)`` with ``U = u e^s`` and ``U' = du e^s``."""
        if x < self.x_lo * (1 - 1e-13):
            raise DomainError(f"x={x} below the tabulated range starting at {self.x_lo}")
        if x >= self.x_hi:
            s, ds = asymptotic_series(self.a, self.b, x)
            return s, ds, -self.a * _num.log(x)
        i = bisect.bisect_left(self._x, x)
        i = min(max(i, 0), len(self._x) - 1)
        x0 = self._x[i]
        if x0 == x:
            return self._u[i], self._du[i], self._log[i]
        u, du = _taylor(self.a, self.b, x0, self._u[i], self._du[i], x - x0)
        return u, du, self._log[i]

    def __call__(self, x: float) -> UEvaluation:
        u, _, s = self.evaluate(x)
        return UEvaluation(u, s)


def _check_x(x):
    if not (x > 0 and _num.isfinite(x)):
        raise DomainError(f"U needs finite x > 0, got {x}")


def confluent_u(a: float, b: float, x: float, x_hi: float | None = None) -> UEvaluation:
    """Tricomi ``U(a, b, x)`` as a scaled value."""
    _check_x(x)
    curve = KummerCurve(a, b, x, x_hi)
    u, _, s = curve.evaluate(x)
    return UEvaluation(u, s)


def confluent_u_pair(a: float, b: float, x: float) -> tuple[UEvaluation, UEvaluation]:
    """``U(a, b, x)`` and ``U(a, b+1, x)`` sharing one log-scale.

    Uses the contiguous relation ``U(a, b+1, x) = U(a, b, x) - U'(a, b, x)``,
    so a single inward sweep provides both.
    """
    _check_x(x)
    u, du, s = KummerCurve(a, b, x).evaluate(x)
    return UEvaluation(u, s), UEvaluation(u - du, s)


def confluent_u_ratio(a: float, l: int, x: float) -> float:
    """``U(a, 2l+3, x) / U(a, 2l+2, x)`` with the scale cancelled."""
    _check_x(x)
    u, du, _ = KummerCurve(a, 2 * l + 2, x).evaluate(x)
    if u == 0.0:
        return math.copysign(math.inf, -du)
    return 1.0 - du / u


def laguerre(n: int, alpha: float, x: float) -> float:
    """Generalised Laguerre polynomial ``L_n^(alpha)(x)`` by upward recurrence."""
    if n < 0 or int(n) != n:
        raise DomainError(f"degree must be a non-negative integer, got {n}")
    prev, cur = 0.0, 1.0
    for k in range(int(n)):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return cur
