"""Direct shooting solver for the radial equation, free of special functions.

The reduced radial function ``u = rho * Phi`` obeys

    u'' = (l(l+1)/rho^2 + xi^2 - 2 V_in) u              rho < R
    u'' = (l(l+1)/rho^2 + xi^2 - 2 alpha / rho) u       rho > R

with ``V_in`` the well depth in Hartree.  The regular solution is integrated
outward from near the origin and the decaying one inward from far outside;
both stop at the well edge, where the potential has its kink.  Any object with
``radius``, ``depth`` and ``alpha`` attributes (``ShellParams``,
``SquareWell``) can be solved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import ode
from scipy.optimize import brentq

from .errors import ConvergenceError, DomainError, NoRootError, ShootingError

RTOL = 1e-12
RHO_START = 1e-6
EXTENT = 40.0
XI_TOL = 1e-11
# Sturm bisection stops at this relative bracket width before the final solve
STURM_WIDTH = 1e-7


@dataclass(frozen=True)
class Mesh:
    rho_start: float
    rho_match: float
    rho_max: float


@dataclass(frozen=True)
class ShootingResult:
    xi: float
    log_derivative_mismatch: float
    node_count: int
    grid: Mesh


@dataclass(frozen=True)
class _Leg:
    u: float
    du: float
    nodes: int
    norm2: float  # int u^2
    norm4: float  # int rho^2 u^2
    samples: np.ndarray | None = None


def _check(problem, xi):
    top = math.sqrt(2.0 * problem.depth)
    if not 0 < xi < top:
        raise DomainError(f"xi={xi} outside (0, {top})")


def _start_radius(problem) -> float:
    return min(RHO_START, 1e-3 * problem.radius)


def outer_turning_point(problem, l: int, xi: float) -> float:
    a = problem.alpha
    disc = a * a + xi * xi * l * (l + 1)
    return (a + math.sqrt(disc)) / (xi * xi)


def exterior_start(problem, l: int, xi: float) -> float:
    return max(problem.radius + EXTENT / xi, outer_turning_point(problem, l, xi) + 10.0 / xi)


def _run(rhs, y0, t0, t1, sample_at=None) -> _Leg:
    """Integrate from ``t0`` to ``t1`` counting sign changes of ``u``."""
    state = {"last": y0[0], "nodes": 0}

    def solout(t, y):
        if y[0] != 0.0 and (y[0] > 0) != (state["last"] > 0):
            state["nodes"] += 1
        if y[0] != 0.0:
            state["last"] = y[0]
        return 0

    # DOP853's own first-step guess misfires on badly scaled states
    first = math.copysign(1e-3 * min(abs(t0), abs(t1 - t0)), t1 - t0)
    solver = ode(rhs).set_integrator("dop853", rtol=RTOL, atol=1e-300, nsteps=200000, first_step=first)
    solver.set_solout(solout)
    solver.set_initial_value(y0, t0)
    out = None
    if sample_at is not None:
        out = np.empty(len(sample_at))
        for i, t in enumerate(sample_at):
            if t != solver.t:
                solver.integrate(t)
            out[i] = solver.y[0]
    if solver.t != t1:
        solver.integrate(t1)
    if not solver.successful():
        raise ConvergenceError(f"DOP853 failed between {t0} and {t1}", method="dop853")
    y = solver.y
    return _Leg(y[0], y[1], state["nodes"], abs(y[2]), abs(y[3]), out)


def _interior_rhs(k2, ll):
    def rhs(t, y):
        u = y[0]
        return [y[1], (ll / (t * t) - k2) * u, u * u, t * t * u * u]

    return rhs


def _exterior_rhs(xi2, alpha, ll):
    def rhs(t, y):
        u = y[0]
        return [y[1], (ll / (t * t) + xi2 - 2.0 * alpha / t) * u, u * u, t * t * u * u]

    return rhs


def _interior(problem, l, xi, sample_at=None) -> _Leg:
    k2 = 2.0 * problem.depth - xi * xi
    r0 = _start_radius(problem)
    # u ~ rho^{l+1} (1 - k^2 rho^2 / (2(2l+3))), rescaled to u(r0) ~ 1
    c = k2 / (2.0 * (2 * l + 3))
    u0 = 1.0 - c * r0 * r0
    du0 = ((l + 1) * (1.0 - c * r0 * r0) - 2.0 * c * r0 * r0) / r0
    # the integrals start from their [0, r0] values, never from exact zeros,
    # so the relative error control of DOP853 stays meaningful
    seed = [u0, du0, r0 / (2 * l + 3), r0**3 / (2 * l + 5)]
    return _run(_interior_rhs(k2, l * (l + 1)), seed, r0, problem.radius, sample_at)


def whittaker_seed(kappa: float, l: int, z: float) -> float:
    """``d ln W / dz`` for the decaying Whittaker function ``W_{kappa, l+1/2}(z)``.

    Summed up to the smallest term of the asymptotic series; a
    :class:`ConvergenceError` is raised if that term is not small.
    """
    a = l + 1 - kappa
    b = -l - kappa
    term, s, ds = 1.0, 1.0, 0.0
    k = 0
    # early terms may grow; the series only turns divergent past this index
    peak = abs(a) + abs(b) + 2
    while True:
        nxt = term * (a + k) * (b + k) / ((k + 1) * -z)
        if nxt == 0.0:
            break
        if abs(nxt) >= abs(term) and k > peak:
            if abs(term) > 1e-15 * abs(s):
                raise ConvergenceError(
                    f"seed series stops decreasing at relative size {abs(term / s):.1e}; start further out",
                    method="whittaker-series",
                    residual=abs(term / s),
                )
            break
        term = nxt
        k += 1
        s += term
        ds -= k * term / z
        if abs(term) < 1e-17 * abs(s):
            break
        if k > 4000:
            raise ConvergenceError("seed series did not settle", method="whittaker-series")
    return -0.5 + kappa / z + ds / s


def _exterior(problem, l, xi, rho_max=None, sample_at=None) -> _Leg:
    if rho_max is None:
        rho_max = exterior_start(problem, l, xi)
        # samples further out move the start beyond them
        if sample_at is not None and len(sample_at):
            rho_max = max(rho_max, float(np.max(sample_at)) + 10.0 / xi)
    z = 2.0 * xi * rho_max
    dlog = 2.0 * xi * whittaker_seed(problem.alpha / xi, l, z)
    rhs = _exterior_rhs(xi * xi, problem.alpha, l * (l + 1))
    # u^2 ~ e^{-2 xi rho}: the part beyond rho_max is u(rho_max)^2 / (2 xi) at
    # leading order; integrating inward the integrals come out negative
    tail = 1.0 / (2.0 * xi)
    return _run(rhs, [1.0, dlog, -tail, -rho_max**2 * tail], rho_max, problem.radius, sample_at)


def integrate_interior(problem, l: int, xi: float) -> float:
    """``u'/u`` at the well edge for the solution regular at the origin."""
    _check(problem, xi)
    leg = _interior(problem, l, xi)
    return leg.du / leg.u


def integrate_exterior(problem, l: int, xi: float, rho_max: float | None = None) -> float:
    """``u'/u`` at the well edge for the solution decaying at infinity."""
    _check(problem, xi)
    leg = _exterior(problem, l, xi, rho_max)
    return leg.du / leg.u


def _mismatch(inner: _Leg, outer: _Leg, scale: float) -> float:
    # Wronskian of the two legs with each (u, u'/scale) pair normalised: sin of
    # the angle between them, so it is bounded and has no poles
    ni = math.hypot(inner.u, inner.du / scale)
    no = math.hypot(outer.u, outer.du / scale)
    return (inner.u * outer.du - inner.du * outer.u) / (scale * ni * no)


def matching_mismatch(problem, l: int, xi: float) -> float:
    _check(problem, xi)
    return _mismatch(_interior(problem, l, xi), _exterior(problem, l, xi), xi)


def sturm_count(problem, l: int, xi: float) -> int:
    """Nodes of the regular solution continued outward to the exterior start.

    This counts the levels lying deeper than ``xi``.
    """
    _check(problem, xi)
    inner = _interior(problem, l, xi)
    rhs = _exterior_rhs(xi * xi, problem.alpha, l * (l + 1))
    rho_max = exterior_start(problem, l, xi)
    size = math.hypot(inner.u, inner.du)
    outer = _run(rhs, [inner.u / size, inner.du / size, 1.0, 1.0], problem.radius, rho_max)
    edge = 1 if inner.u == 0.0 else 0
    return inner.nodes + outer.nodes + edge


def shoot(problem, l: int, bracket: tuple[float, float]) -> ShootingResult:
    """Solve the matching condition inside ``bracket``."""
    lo, hi = sorted(bracket)
    n_lo, n_hi = sturm_count(problem, l, lo), sturm_count(problem, l, hi)
    if n_lo - n_hi > 1:
        raise ShootingError(f"bracket [{lo}, {hi}] holds {n_lo - n_hi} levels; split it")
    f_lo, f_hi = matching_mismatch(problem, l, lo), matching_mismatch(problem, l, hi)
    if (f_lo > 0) == (f_hi > 0):
        raise ShootingError(f"mismatch has the same sign at both ends of [{lo}, {hi}]")
    xi = brentq(lambda x: matching_mismatch(problem, l, x), lo, hi, xtol=XI_TOL, rtol=4 * np.finfo(float).eps)
    inner = _interior(problem, l, xi)
    outer = _exterior(problem, l, xi)
    nodes = inner.nodes + outer.nodes
    mesh = Mesh(_start_radius(problem), problem.radius, exterior_start(problem, l, xi))
    return ShootingResult(xi, _mismatch(inner, outer, xi), nodes, mesh)


def oracle_level(problem, l: int, nr: int) -> ShootingResult:
    """Level ``nr`` of angular momentum ``l`` by Sturm bisection plus shooting."""
    # invariant: sturm_count(lo) > nr >= sturm_count(hi); the only level
    # between them is then number nr once the counts are nr + 1 and nr
    hi = math.sqrt(2.0 * problem.depth) * (1.0 - 1e-9)
    n_hi = sturm_count(problem, l, hi)
    if n_hi > nr:
        raise NoRootError("levels found above the window top")
    lo = 0.5 * hi
    for _ in range(30):
        n_lo = sturm_count(problem, l, lo)
        if n_lo > nr:
            break
        hi, n_hi, lo = lo, n_lo, 0.5 * lo
    else:
        raise NoRootError(f"level l={l}, nr={nr} not found")
    while (n_lo > nr + 1 or n_hi < nr) and hi - lo > STURM_WIDTH * hi:
        mid = 0.5 * (lo + hi)
        n_mid = sturm_count(problem, l, mid)
        if n_mid > nr:
            lo, n_lo = mid, n_mid
        else:
            hi, n_hi = mid, n_mid
    # the count switches within about e^{-2 EXTENT} of the level; widen until
    # the mismatch changes sign
    width = STURM_WIDTH * hi
    for _ in range(10):
        try:
            return shoot(problem, l, (lo, hi))
        except ShootingError:
            lo, hi = lo - width, hi + width
            width *= 4
    raise NoRootError(f"no matching root near xi={0.5 * (lo + hi)}")


def oracle_levels(problem, l: int, nr_max: int) -> list[ShootingResult]:
    return [oracle_level(problem, l, nr) for nr in range(nr_max + 1)]


@dataclass(frozen=True)
class OracleWavefunction:
    rho: np.ndarray
    phi: np.ndarray
    r2: float
    norm_c: float


def oracle_wavefunction(problem, l: int, xi: float, rho=None) -> OracleWavefunction:
    """Normalised ``Phi`` at the sample radii ``rho`` plus ``<r^2>``.

    The interior and exterior legs are joined by scaling the exterior to the
    interior value at the edge; norms come from integrals carried along with
    the ODE state, so no separate quadrature is involved.
    """
    _check(problem, xi)
    rho = np.array([] if rho is None else rho, dtype=float)
    if np.any(rho <= 0):
        raise DomainError("sample radii must be positive")
    r_edge = problem.radius
    order = np.argsort(rho)
    srt = rho[order]
    inside = srt[srt <= r_edge]
    outside = srt[srt > r_edge][::-1]
    r0 = _start_radius(problem)
    inner = _interior(problem, l, xi, np.maximum(inside, r0))
    outer = _exterior(problem, l, xi, sample_at=outside)
    scale = inner.u / outer.u
    norm2 = inner.norm2 + scale**2 * outer.norm2
    norm4 = inner.norm4 + scale**2 * outer.norm4
    u = np.concatenate((inner.samples, scale * outer.samples[::-1]))
    # the interior seed starts at r0; below it u follows rho^{l+1}
    small = srt < r0
    u[: len(inside)][small[: len(inside)]] *= (srt[small] / r0) ** (l + 1)
    phi = np.empty_like(rho)
    phi[order] = u / (srt * math.sqrt(norm2))
    c = inner.u / (r_edge * math.sqrt(norm2))
    if c < 0:
        phi, c = -phi, -c
    return OracleWavefunction(rho, phi, norm4 / norm2, c)


def oracle_r2(problem, l: int, xi: float) -> float:
    return oracle_wavefunction(problem, l, xi).r2
