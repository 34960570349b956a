"""Normalised radial eigenfunctions and the observables built from them."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .errors import ConvergenceError, DomainError
from .exact import EigenSolution, find_level, interior_wavenumber
from .model import HBAR_EV_S, RYDBERG_EV, QuantumNumbers, ShellParams
from .specfun import KummerCurve, spherical_bessel_j, spherical_bessel_pair

QUAD_RTOL = 1e-10
TAIL_FRACTION = 1e-12
# exterior extent in units of the decay length 1/xi
EXTENT = 40.0
# relative half-width of the strip below x = 2 xi eta where U is also tabulated,
# so the exterior branch can be continued a little inside the shell
_INSIDE_STRIP = 1e-3


def default_extent(solution: EigenSolution, params: ShellParams) -> float:
    return params.eta + EXTENT / solution.xi


@dataclass(frozen=True)
class RadialWavefunction:
    """One bound state, normalised so that the integral of rho^2 Phi^2 is 1.

    Both branches are written relative to their value at the shell, so each
    equals 1 at ``rho = eta`` and ``norm_c`` is the value of Phi there.
    """

    solution: EigenSolution
    params: ShellParams
    norm_c: float
    interior_ref: float
    exterior_ref: float
    exterior_sign: int
    rho_max: float
    _curve: KummerCurve = field(repr=False, compare=False)

    @property
    def l(self) -> int:
        return self.solution.l

    @property
    def xi(self) -> float:
        return self.solution.xi

    def branch_values(self, rho: float) -> tuple[float, float]:
        """Unnormalised (interior formula, exterior formula) at ``rho``.

        Either formula can be continued slightly across the shell, which is
        what the continuity checks rely on.
        """
        return self._interior(rho), self._exterior(rho)

    def _interior(self, rho: float) -> float:
        lam = self.solution.lambda_int
        return spherical_bessel_j(self.l, lam * rho) / self.interior_ref

    def _exterior(self, rho: float) -> float:
        u, _, s = self._curve.evaluate(2.0 * self.xi * rho)
        eta = self.params.eta
        # e^{-xi(rho - eta)} is combined with the U scale before exponentiating
        expo = s - self.exterior_ref - self.xi * (rho - eta)
        return self.exterior_sign * (rho / eta) ** self.l * u * math.exp(expo)

    def shape(self, rho: float) -> float:
        if rho < 0:
            raise DomainError(f"rho must be non-negative, got {rho}")
        if rho <= self.params.eta:
            return self._interior(rho)
        return self._exterior(rho)

    def boundary_log_derivatives(self) -> tuple[float, float]:
        """Analytic d ln Phi / d rho at the shell from the inside and outside."""
        eta, l, xi = self.params.eta, self.l, self.xi
        z = self.solution.lambda_int * eta
        jl, jl1 = spherical_bessel_pair(l, z)
        inside = self.solution.lambda_int * (l / z - jl1 / jl)
        u, du, _ = self._curve.evaluate(2.0 * xi * eta)
        outside = l / eta - xi + 2.0 * xi * du / u
        return inside, outside


def evaluate_phi(wf: RadialWavefunction, rho):
    """Phi(rho) including the normalisation constant; accepts scalars or arrays."""
    if np.ndim(rho) == 0:
        return wf.norm_c * wf.shape(float(rho))
    rho = np.asarray(rho, dtype=float)
    return wf.norm_c * np.array([wf.shape(r) for r in rho.ravel()]).reshape(rho.shape)


def _panels(a: float, b: float, width: float) -> np.ndarray:
    n = max(1, int(math.ceil((b - a) / width)))
    return np.linspace(a, b, n + 1)


def _integrate(func, edges) -> float:
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        with warnings.catch_warnings():
            warnings.simplefilter("error", IntegrationWarning)
            try:
                val, _ = quad(func, lo, hi, epsabs=0.0, epsrel=QUAD_RTOL, limit=200)
            except IntegrationWarning as exc:
                raise ConvergenceError(
                    f"quadrature on [{lo}, {hi}] failed: {exc}", method="quad"
                ) from exc
        total += val
    return total


def _moment(shape, power: int, eta: float, rho_max: float, xi: float) -> tuple[float, float]:
    """(interior, exterior) integrals of rho^power * shape(rho)^2."""
    first = min(eta / 8.0, 1.0)
    inner_edges = np.concatenate(([0.0], _panels(first, eta, max(eta / 8.0, 1.0))))
    outer_edges = _panels(eta, rho_max, 1.0 / xi)

    def integrand(r):
        return r**power * shape(r) ** 2

    return _integrate(integrand, inner_edges), _integrate(integrand, outer_edges)


def _tail_bound(shape, power: int, rho_max: float, xi: float) -> float:
    # beyond the last turning point rho^p Phi^2 is log-concave; bound its tail by
    # value / |log-derivative|
    h = 1e-4 * rho_max
    f0 = rho_max**power * shape(rho_max) ** 2
    f1 = (rho_max + h) ** power * shape(rho_max + h) ** 2
    if f0 == 0.0:
        return 0.0
    slope = (math.log(f1) - math.log(f0)) / h if f1 > 0 else -2.0 * xi
    if slope >= 0:
        return math.inf
    return f0 / -slope


def _build(solution: EigenSolution, params: ShellParams, rho_max: float) -> RadialWavefunction:
    eta, xi, l = params.eta, solution.xi, solution.l
    lam = interior_wavenumber(params.depth, xi)
    if lam != solution.lambda_int:
        solution = EigenSolution(
            solution.qn, xi, solution.energy_ry, lam, solution.residual, solution.method, eta
        )
    x_eta = 2.0 * xi * eta
    curve = KummerCurve(l + 1 - params.alpha / xi, 2 * l + 2, x_eta * (1 - _INSIDE_STRIP))
    u, _, s = curve.evaluate(x_eta)
    if u == 0.0:
        raise DomainError("exterior function vanishes at the shell")
    j_eta = spherical_bessel_j(l, lam * eta)
    if j_eta == 0.0:
        raise DomainError("interior function vanishes at the shell")
    ref = s + math.log(abs(u))
    sign = 1 if u > 0 else -1
    return RadialWavefunction(solution, params, 1.0, j_eta, ref, sign, rho_max, curve)


def normalize(solution: EigenSolution, params: ShellParams) -> RadialWavefunction:
    """Compute C so that the full radial density integrates to one.

    The exterior integral stops at ``eta + 40/xi``; the remainder is bounded
    from the exponential tail and the cut is pushed out until that bound is
    below ``1e-12`` of the total.
    """
    if params.eta <= 0:
        raise DomainError("normalize needs eta > 0")
    rho_max = default_extent(solution, params)
    wf = _build(solution, params, rho_max)
    inner, outer = _moment(wf.shape, 2, params.eta, rho_max, solution.xi)
    for _ in range(10):
        total = inner + outer
        tail = _tail_bound(wf.shape, 2, rho_max, solution.xi)
        if tail < TAIL_FRACTION * total:
            break
        new_max = rho_max + 20.0 / solution.xi
        outer += _integrate(lambda r: r * r * wf.shape(r) ** 2, _panels(rho_max, new_max, 1.0 / solution.xi))
        rho_max = new_max
    else:
        raise ConvergenceError("exterior tail did not become negligible", method="tail-bound", residual=tail)
    c = 1.0 / math.sqrt(inner + outer)
    object.__setattr__(wf, "norm_c", c)
    object.__setattr__(wf, "rho_max", rho_max)
    return wf


def wavefunction(params: ShellParams, l: int, nr: int) -> RadialWavefunction:
    return normalize(find_level(params, l, nr), params)


def distribution(wf: RadialWavefunction, rho_grid) -> np.ndarray:
    """Rows of ``(rho, rho^2 Phi^2)`` on a strictly increasing positive grid."""
    rho = np.asarray(rho_grid, dtype=float)
    if rho.ndim != 1 or np.any(rho <= 0) or np.any(np.diff(rho) <= 0):
        raise DomainError("grid must be one-dimensional, positive and strictly increasing")
    phi = evaluate_phi(wf, rho)
    return np.column_stack((rho, rho * rho * phi * phi))


def r2_expectation(wf: RadialWavefunction) -> float:
    """Mean-square radius in Bohr radii squared."""
    inner, outer = _moment(wf.shape, 4, wf.params.eta, wf.rho_max, wf.xi)
    return wf.norm_c**2 * (inner + outer)


def count_nodes(wf: RadialWavefunction, samples: int = 4000) -> int:
    """Sign changes of Phi on ``(0, rho_max]``."""
    rho = np.linspace(0.0, wf.rho_max, samples + 1)[1:]
    vals = np.array([wf.shape(r) for r in rho])
    vals = vals[vals != 0.0]
    return int(np.count_nonzero(np.signbit(vals[:-1]) != np.signbit(vals[1:])))


GROUND = QuantumNumbers(0, 0)
FIRST_EXCITED = QuantumNumbers(1, 0)


def excitation_energy(params: ShellParams) -> float:
    """Gap in Ry between the (l=0, nr=0) ground state and the (l=1, nr=0) level."""
    g = find_level(params, GROUND.l, GROUND.nr)
    e = find_level(params, FIRST_EXCITED.l, FIRST_EXCITED.nr)
    return g.xi**2 - e.xi**2


def transition_frequency_thz(delta_e_ry: float) -> float:
    """``Delta E / hbar`` in units of 1e12 s^-1."""
    return delta_e_ry * RYDBERG_EV / HBAR_EV_S / 1e12


@dataclass(frozen=True)
class StateEntry:
    l: int
    nr: int
    xi: float
    energy_ry: float


@dataclass(frozen=True)
class ObservableReport:
    eta: float
    states: tuple[StateEntry, ...]
    delta_e_ry: float
    omega_thz: float
    r2_ground: float


def observables(params: ShellParams) -> ObservableReport:
    g = find_level(params, GROUND.l, GROUND.nr)
    e = find_level(params, FIRST_EXCITED.l, FIRST_EXCITED.nr)
    delta = g.xi**2 - e.xi**2
    states = tuple(StateEntry(s.l, s.nr, s.xi, s.energy_ry) for s in (g, e))
    r2 = r2_expectation(normalize(g, params))
    return ObservableReport(params.eta, states, delta, transition_frequency_thz(delta), r2)
