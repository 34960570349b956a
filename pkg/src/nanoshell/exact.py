"""Exact bound levels of the nanoshell from the special-function dispersion relation.

Matching ``j_l`` inside to the decaying confluent function outside gives

    U(a, 2l+3, x) - Lambda_l U(a, 2l+2, x) = 0,
    a = l + 1 - 1/xi,  x = 2 xi eta,
    Lambda_l = (1 + beta j_{l+1}(beta xi eta) / j_l(beta xi eta)) / 2,

with ``beta = sqrt(2/(eta xi^2) - 1)``.  The residual used for root finding is
multiplied through by ``j_l`` and divided by ``max(|U_2|, |U_3|)``, which
leaves a function of ``xi`` that is continuous and changes sign only at
eigenvalues.
"""

from __future__ import annotations

import functools
import logging
import math
import warnings
from dataclasses import dataclass

import mpmath
import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, WindowError
from .model import QuantumNumbers, ShellParams, SquareWell, energy_from_xi
from .specfun import _num
from .specfun import (
    confluent_u_pair,
    spherical_bessel_pair,
    spherical_bessel_ratio,
    spherical_hankel1_imag,
)

log = logging.getLogger(__name__)

SCAN_INTERVALS = 2000
EDGE_MARGIN = 1e-9
ROOT_XTOL = 1e-13
HYDROGEN_DPS = 50
# scans always look for at least this many levels so that cached results
# serve every nr up to it
MIN_LEVELS_SCANNED = 4


class IncompleteSpectrumWarning(UserWarning):
    """Fewer levels were found in the search window than were requested."""


@dataclass(frozen=True)
class DispersionEval:
    value: float
    pole: bool
    xi: float


@dataclass(frozen=True)
class EigenSolution:
    qn: QuantumNumbers
    xi: float
    energy_ry: float
    lambda_int: float
    residual: float
    method: str = "exact"
    eta: float = math.nan

    @property
    def l(self) -> int:
        return self.qn.l

    @property
    def nr(self) -> int:
        return self.qn.nr


def interior_wavenumber(depth: float, xi: float) -> float:
    """``sqrt(2 V0 - xi^2)``; for the shell this is ``lambda = sqrt(2/eta - xi^2)``."""
    return _num.sqrt(2 * depth - xi * xi)


def _coulomb_well_residual(radius, depth, alpha, l, xi, normalise=True) -> DispersionEval:
    if not 0.0 < xi * xi < 2.0 * depth:
        raise WindowError(f"xi={xi} outside (0, {math.sqrt(2 * depth)})")
    k = interior_wavenumber(depth, xi)
    z = k * radius
    jl, jl1 = spherical_bessel_pair(l, z)
    pole = spherical_bessel_ratio(l, z).pole if z > 0 else False
    # beta = k/xi, written without the 2/(eta xi^2) - 1 cancellation
    beta = k / xi
    u2, u3 = confluent_u_pair(l + 1 - alpha / xi, 2 * l + 2, 2.0 * xi * radius)
    value = jl * u3.value - 0.5 * (jl + beta * jl1) * u2.value
    if normalise:
        value /= max(abs(u2.value), abs(u3.value))
    else:
        # analytic in xi; only safe where exp() cannot overflow (mpmath)
        value *= _num.exp(u2.log_scale)
    return DispersionEval(value, pole, xi)


def dispersion(params: ShellParams, l: int, xi: float) -> DispersionEval:
    """Scaled, denominator-free residual of the shell dispersion relation."""
    if params.eta <= 0:
        raise DomainError("dispersion needs eta > 0")
    return _coulomb_well_residual(params.eta, params.depth, params.alpha, l, xi)


def coulomb_well_dispersion(well: SquareWell, l: int, xi: float) -> DispersionEval:
    """Same residual for an arbitrary depth/radius/tail strength.

    With ``alpha = 0`` the exterior function is ``U(l+1, 2l+2, .)``, i.e. the
    finite spherical well written in confluent-function form.
    """
    return _coulomb_well_residual(well.radius, well.depth, well.alpha, l, xi)


def shell_lambda(params: ShellParams, l: int, xi: float) -> float:
    """``Lambda_l(xi, eta)``; infinite at a zero of ``j_l``."""
    k = interior_wavenumber(params.depth, xi)
    ratio = spherical_bessel_ratio(l, k * params.eta)
    return 0.5 * (1.0 + (k / xi) * ratio.value)


def well_limit_dispersion(r_dimless: float, v0: float, l: int, xi: float) -> float:
    """Residual of the finite spherical-well condition in Hankel form.

    ``k j_l'(kR)/j_l(kR) - i chi h_l'(i chi R)/h_l(i chi R)`` multiplied by
    ``j_l(kR)``, with ``k = sqrt(2 v0 - xi^2)`` and ``chi = xi`` (Hartree units,
    ``v0`` independent of ``R``).
    """
    if r_dimless <= 0 or v0 <= 0:
        raise DomainError("need R > 0 and V0 > 0")
    if not 0.0 < 0.5 * xi * xi <= v0:
        raise WindowError(f"need 0 < |E| <= V0, got xi={xi}, V0={v0}")
    k = interior_wavenumber(v0, xi)
    z = k * r_dimless
    jl, jl1 = spherical_bessel_pair(l, z)
    djl = (l / z) * jl - jl1 if z > 0 else 0.0
    return k * djl - xi * spherical_hankel1_imag(l, xi * r_dimless) * jl


def _grid_values(func, grid):
    values = np.empty(len(grid))
    for i, x in enumerate(grid.tolist()):
        ev = func(x)
        if ev.pole:
            # nudge off the Bessel zero; the cleared residual is smooth there
            ev = func(x * (1 - 1e-7))
        values[i] = ev.value
    return values


def _roots_in(func, lo, hi, intervals):
    grid = np.linspace(lo, hi, intervals + 1)
    values = _grid_values(func, grid)
    roots = []
    for i in np.nonzero(np.signbit(values[:-1]) != np.signbit(values[1:]))[0]:
        roots.append(brentq(lambda x: func(float(x)).value, grid[i], grid[i + 1], xtol=ROOT_XTOL, rtol=1e-15))
    return roots


def scan_roots(func, lo: float, hi: float, intervals: int = SCAN_INTERVALS) -> list[float]:
    """All sign-change roots of ``func(xi).value`` on ``[lo, hi]``, descending."""
    return sorted(_roots_in(func, lo, hi, intervals), reverse=True)


def search_floor(xi_top: float, l: int, nr_max: int) -> float:
    return min(0.3 / (nr_max + l + 2), 0.3 * xi_top)


@functools.lru_cache(maxsize=256)
def _shell_levels(eta: float, l: int, nr_max: int) -> tuple[EigenSolution, ...]:
    params = ShellParams(eta)
    top = params.xi_max * (1 - EDGE_MARGIN)
    floor = search_floor(top, l, nr_max)
    func = functools.partial(dispersion, params, l)
    roots = scan_roots(func, floor, top)
    extensions = 0
    while len(roots) < nr_max + 1 and extensions < 4:
        new_floor = 0.5 * floor
        roots += scan_roots(func, new_floor, floor, SCAN_INTERVALS // 4)
        floor = new_floor
        extensions += 1
    roots = sorted(set(roots), reverse=True)
    out = []
    for nr, xi in enumerate(roots):
        lam = interior_wavenumber(params.depth, xi)
        out.append(
            EigenSolution(
                qn=QuantumNumbers(l, nr),
                xi=xi,
                energy_ry=energy_from_xi(xi),
                lambda_int=lam,
                residual=abs(func(xi).value),
                method="exact",
                eta=eta,
            )
        )
    return tuple(out)


def find_levels(params: ShellParams, l: int, nr_max: int) -> list[EigenSolution]:
    """Bound levels of angular momentum ``l``, deepest first (``nr = 0``).

    Every root found in the search window is returned, at least ``nr_max + 1``
    of them when they exist.  A shortfall is signalled with
    :class:`IncompleteSpectrumWarning` rather than an exception, since shallow
    wells may hold only a few states.
    """
    if params.eta <= 0:
        raise DomainError("find_levels needs eta > 0")
    if l < 0 or nr_max < 0:
        raise DomainError("l and nr_max must be non-negative")
    levels = list(_shell_levels(float(params.eta), int(l), max(int(nr_max), MIN_LEVELS_SCANNED - 1)))
    if len(levels) < nr_max + 1:
        warnings.warn(
            f"eta={params.eta}, l={l}: found {len(levels)} levels, wanted {nr_max + 1}",
            IncompleteSpectrumWarning,
            stacklevel=2,
        )
    return levels


def find_level(params: ShellParams, l: int, nr: int) -> EigenSolution:
    levels = find_levels(params, l, nr)
    if len(levels) <= nr:
        raise DomainError(f"level l={l}, nr={nr} not bound at eta={params.eta}")
    return levels[nr]


def find_well_roots(well: SquareWell, l: int, form: str = "confluent") -> list[float]:
    """Bound-state ``xi`` values of a finite well (``alpha = 0``), deepest first."""
    top = well.xi_max * (1 - EDGE_MARGIN)
    if form == "confluent":
        func = functools.partial(coulomb_well_dispersion, well, l)
    elif form == "hankel":
        if well.alpha != 0:
            raise DomainError("the Hankel form only describes alpha = 0")

        def func(xi):
            return DispersionEval(well_limit_dispersion(well.radius, well.depth, l, xi), False, xi)
    else:
        raise ValueError(f"unknown form {form!r}")
    return scan_roots(func, top * 1e-4, top)


def polish_root_mp(params: ShellParams, l: int, xi: float, dps: int = HYDROGEN_DPS):
    """Re-solve the dispersion relation near ``xi`` in ``dps``-digit arithmetic.

    The same kernels run on mpmath numbers.  The residual is used without the
    ``max |U|`` normalisation: near the hydrogen limit the normalised form is
    a near-step in ``xi``, while the raw form is smooth and secant-friendly.
    Returns an ``mpmath.mpf``.
    """
    with mpmath.workdps(dps):
        eta = mpmath.mpf(params.eta)
        depth = 1 / eta

        def f(x):
            return _coulomb_well_residual(eta, depth, 1, l, x, normalise=False).value

        centre = mpmath.mpf(xi)
        width = mpmath.mpf("1e-11") * centre
        for _ in range(8):
            lo, hi = centre - width, centre + width
            if mpmath.sign(f(lo)) != mpmath.sign(f(hi)):
                return mpmath.findroot(f, (lo, hi), solver="anderson")
            width *= 10
    raise DomainError(f"no sign change near xi={xi} at extended precision")


def hydrogen_limit_check(l: int, nr: int, eta_small: float) -> float:
    """``xi_{l,nr}(eta_small) - 1/(nr + l + 1)`` for a vanishing shell.

    For ``l >= 1`` the shift falls like ``eta^(2l+2)`` and is far below double
    precision resolution of ``xi``, so the double-precision root is re-polished
    at extended precision before the difference is taken.
    """
    if not 0 < eta_small <= 0.01:
        raise DomainError(f"eta_small must lie in (0, 0.01], got {eta_small}")
    params = ShellParams(eta_small)
    level = find_level(params, l, nr)
    with mpmath.workdps(HYDROGEN_DPS):
        root = polish_root_mp(params, l, level.xi)
        return float(root - mpmath.mpf(1) / (nr + l + 1))
