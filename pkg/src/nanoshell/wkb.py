"""Semiclassical levels of the nanoshell with Langer-shifted angular momentum.

The radial momentum is ``Q^2 = 2 (E - V) - L^2 / rho^2`` with ``L = l + 1/2``.
For deep levels of a large shell the inner turning point sits inside the
shell and the outer one in the Coulomb tail; the phase integral then has the
closed form used by :func:`quantization_residual`.  When both turning points
lie in the tail the levels are exactly hydrogenic.
"""

from __future__ import annotations

import enum
import math
import statistics
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .errors import DomainError, NoRootError, RegimeError
from .exact import find_level
from .model import QuantumNumbers, ShellParams

SCAN_POINTS = 2000
XI_TOL = 1e-12
CLAMP_SLACK = 1e-12


class Regime(str, enum.Enum):
    HYDROGEN_WINDOW = "hydrogen-window"
    TRANSCENDENTAL = "transcendental"
    OUTSIDE_VALIDITY = "outside-validity"


class Orbit(str, enum.Enum):
    """Where the classically allowed region lies relative to the shell."""

    TWO_PIECE = "two-piece"
    COULOMB = "coulomb"


@dataclass(frozen=True)
class TurningPoints:
    inner: float
    outer: float
    orbit: Orbit


@dataclass(frozen=True)
class WkbLevel:
    qn: QuantumNumbers
    xi: float
    regime: Regime
    turning_points: TurningPoints | None


def _big_l(l: int) -> float:
    if l < 0 or int(l) != l:
        raise DomainError(f"l must be a non-negative integer, got {l}")
    return l + 0.5


def momentum_squared(params: ShellParams, l: int, xi: float, rho: float) -> float:
    """``Q^2(rho)`` for the piecewise potential."""
    if rho <= 0:
        raise DomainError("rho must be positive")
    big_l = _big_l(l)
    pot = 2.0 / params.eta if rho <= params.eta else 2.0 / rho
    return pot - xi * xi - (big_l / rho) ** 2


def turning_points(params: ShellParams, l: int, xi: float) -> TurningPoints:
    """Zeros of ``Q`` that bound the classically allowed region."""
    eta = params.eta
    big_l = _big_l(l)
    if xi <= 0:
        raise DomainError("xi must be positive")
    if xi * big_l >= 1.0:
        raise RegimeError(f"no classically allowed region: xi*L = {xi * big_l} >= 1")
    k2 = 2.0 / eta - xi * xi
    if k2 <= 0:
        raise RegimeError(f"xi^2 = {xi * xi} is not below the well depth 2/eta")
    disc = math.sqrt(1.0 - (xi * big_l) ** 2)
    outer = (1.0 + disc) / xi**2
    # (1 - disc)/xi^2 written without the cancellation
    lower = big_l**2 / (1.0 + disc)
    inner_shell = big_l / math.sqrt(k2)
    if inner_shell <= eta and outer >= eta:
        return TurningPoints(inner_shell, outer, Orbit.TWO_PIECE)
    if lower >= eta:
        return TurningPoints(lower, outer, Orbit.COULOMB)
    raise RegimeError(f"no allowed region at xi={xi}, l={l}, eta={eta}")


def _clamp(x: float) -> float:
    if abs(x) > 1.0 + CLAMP_SLACK:
        raise RegimeError(f"inverse-trig argument {x} outside [-1, 1]")
    return min(1.0, max(-1.0, x))


def quantization_residual(params: ShellParams, qn: QuantumNumbers, xi: float) -> float:
    """Closed-form quantization function for the two-piece orbit.

    Zero at a semiclassical level; equal to (phase integral - pi(nr + 1/2))/L.
    """
    eta = params.eta
    big_l = qn.big_l
    root = math.sqrt(1.0 - (xi * big_l) ** 2)
    t1 = math.asin(_clamp((1.0 - big_l**2 / eta) / root))
    t2 = math.acos(_clamp(big_l / math.sqrt(2.0 * eta - (xi * eta) ** 2)))
    t3 = math.asin(_clamp((1.0 - xi * xi * eta) / root)) / (xi * big_l)
    t4 = math.pi / big_l * (qn.nr + (big_l + 1.0 - 1.0 / xi) / 2.0)
    return t1 - t2 + t3 - t4


def phase_integral(params: ShellParams, l: int, xi: float) -> float:
    """``int Q d rho`` between the turning points, by quadrature.

    The square-root endpoint behaviour is handled with an algebraic weight,
    leaving smooth integrands.
    """
    tp = turning_points(params, l, xi)
    eta = params.eta
    big_l = _big_l(l)
    disc = math.sqrt(1.0 - (xi * big_l) ** 2)
    lower = big_l**2 / (1.0 + disc)
    upper = tp.outer
    # the phase is O(1) or larger, so an absolute floor is harmless
    opts = dict(epsabs=1e-13, epsrel=1e-13, limit=200)
    # Coulomb arc: Q = xi sqrt((rho - lower)(upper - rho)) / rho
    arc, _ = quad(lambda r: xi / r, lower, upper, weight="alg", wvar=(0.5, 0.5), **opts)
    if tp.orbit is Orbit.COULOMB:
        return arc
    # two-piece orbit: drop the part of the arc inside the shell, add the well part
    cut = 0.0
    if lower < eta:
        cut, _ = quad(lambda r: xi * math.sqrt(upper - r) / r, lower, eta, weight="alg", wvar=(0.5, 0.0), **opts)
    k = math.sqrt(2.0 / eta - xi * xi)
    r_in = tp.inner
    inside = 0.0
    if eta > r_in:
        # Q = k sqrt(rho - r_in) sqrt(rho + r_in) / rho
        inside, _ = quad(lambda r: k * math.sqrt(r + r_in) / r, r_in, eta, weight="alg", wvar=(0.5, 0.0), **opts)
    outside = arc - cut
    return inside + outside


def hydrogen_window(params: ShellParams, qn: QuantumNumbers) -> tuple[float, float]:
    """Range of ``xi^2`` in which the hydrogenic level is the semiclassical one."""
    eta, big_l = params.eta, qn.big_l
    return 2.0 / eta - (big_l / eta) ** 2, min(1.0 / eta, 1.0 / big_l**2)


def transcendental_top(params: ShellParams, qn: QuantumNumbers) -> float:
    """Largest ``xi`` allowed for the two-piece orbit."""
    eta, big_l = params.eta, qn.big_l
    top2 = min(1.0 / big_l**2, 2.0 / eta - (big_l / eta) ** 2)
    if top2 <= 0:
        raise RegimeError(f"l={qn.l} admits no two-piece orbit at eta={eta}")
    return math.sqrt(top2)


def _scan_root(func, lo: float, hi: float, points: int) -> float:
    grid = np.linspace(lo, hi, points + 1).tolist()
    vals = [func(x) for x in grid]
    for i in range(points, 0, -1):
        if (vals[i - 1] > 0) != (vals[i] > 0):
            return brentq(func, grid[i - 1], grid[i], xtol=XI_TOL, rtol=4 * np.finfo(float).eps)
    raise NoRootError(f"no sign change on [{lo}, {hi}]")


def wkb_level(params: ShellParams, qn: QuantumNumbers) -> WkbLevel:
    """Semiclassical ``xi`` for one level.

    The hydrogenic value is returned when it falls in its window; otherwise
    the closed-form condition is solved over the two-piece window.
    """
    if params.eta <= 0:
        raise DomainError("wkb_level needs eta > 0")
    xi_h = 1.0 / qn.hydrogen_n
    lo, hi = hydrogen_window(params, qn)
    if lo <= xi_h**2 <= hi:
        return WkbLevel(qn, xi_h, Regime.HYDROGEN_WINDOW, turning_points(params, qn.l, xi_h))
    if qn.l > math.sqrt(2.0 * params.eta) - 0.5:
        return WkbLevel(qn, math.nan, Regime.OUTSIDE_VALIDITY, None)
    top = transcendental_top(params, qn) * (1.0 - 1e-12)
    try:
        xi = _scan_root(lambda x: quantization_residual(params, qn, x), top * 1e-3, top, SCAN_POINTS)
    except NoRootError as exc:
        raise NoRootError(f"eta={params.eta}, l={qn.l}, nr={qn.nr}: {exc}") from exc
    return WkbLevel(qn, xi, Regime.TRANSCENDENTAL, turning_points(params, qn.l, xi))


def phase_level(params: ShellParams, qn: QuantumNumbers, points: int = 200) -> float:
    """Level from the quadrature phase integral (independent of the closed form)."""
    target = math.pi * (qn.nr + 0.5)
    top = transcendental_top(params, qn) * (1.0 - 1e-12)
    return _scan_root(lambda x: phase_integral(params, qn.l, x) - target, top * 1e-3, top, points)


@dataclass(frozen=True)
class Deviation:
    qn: QuantumNumbers
    xi_exact: float
    xi_wkb: float

    @property
    def abs_dev(self) -> float:
        return abs(self.xi_exact - self.xi_wkb)


@dataclass(frozen=True)
class DeviationTable:
    eta: float
    rows: tuple[Deviation, ...]

    @property
    def max_dev(self) -> float:
        return max(r.abs_dev for r in self.rows)

    @property
    def median_dev(self) -> float:
        return statistics.median(r.abs_dev for r in self.rows)


def wkb_vs_exact(params: ShellParams, lmax: int, nrmax: int) -> DeviationTable:
    rows = []
    for l in range(lmax + 1):
        for nr in range(nrmax + 1):
            qn = QuantumNumbers(l, nr)
            rows.append(Deviation(qn, find_level(params, l, nr).xi, wkb_level(params, qn).xi))
    return DeviationTable(params.eta, tuple(rows))


def xi_eta_slope(params: ShellParams, qn: QuantumNumbers, h: float | None = None) -> float:
    """Centred finite-difference ``d xi / d eta`` of the semiclassical level."""
    eta = params.eta
    h = eta * 1e-3 if h is None else h
    if not 0 < h < eta:
        raise DomainError("step must satisfy 0 < h < eta")
    left = wkb_level(ShellParams(eta - h), qn)
    right = wkb_level(ShellParams(eta + h), qn)
    for side in (left, right):
        if side.regime is not Regime.TRANSCENDENTAL:
            raise RegimeError(f"stencil point left the transcendental regime ({side.regime.value})")
    return (right.xi - left.xi) / (2.0 * h)
