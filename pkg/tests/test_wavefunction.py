import math

import numpy as np
import pytest
from scipy.integrate import quad, trapezoid

from conftest import level, wavefunction
from nanoshell import reference as ref
from nanoshell.errors import DomainError
from nanoshell.model import ShellParams
from nanoshell.oracle import oracle_wavefunction
from nanoshell.wavefunction import (
    _build,
    _moment,
    count_nodes,
    distribution,
    evaluate_phi,
    excitation_energy,
    observables,
    r2_expectation,
    transition_frequency_thz,
)


def norm_integral(wf):
    inner, outer = _moment(wf.shape, 2, wf.params.eta, wf.rho_max, wf.xi)
    return wf.norm_c**2 * (inner + outer)


def test_value_at_shell_is_the_normalisation_constant():
    wf = wavefunction(50, 1, 2)
    assert evaluate_phi(wf, 50.0) == wf.norm_c
    assert wf.branch_values(50.0) == pytest.approx((1.0, 1.0), rel=1e-15)


@pytest.mark.xfail(
    strict=True,
    reason="Phi ~ rho^(1/xi - 1) e^(-xi rho): at 30 decay lengths the power law leaves 3.8e-9 C",
)
def test_tail_below_1e_minus_10_at_30_decay_lengths():
    wf = wavefunction(200, 0, 0)
    assert abs(evaluate_phi(wf, 200 + 30 / wf.xi)) < 1e-10 * wf.norm_c


def test_exponential_tail_matches_oracle():
    wf = wavefunction(200, 0, 0)
    rho = [200 + k / wf.xi for k in (30, 40, 50, 80)]
    phi = evaluate_phi(wf, rho) / wf.norm_c
    o = oracle_wavefunction(ShellParams(200), 0, wf.xi, rho)
    assert phi == pytest.approx(o.phi / o.norm_c, rel=1e-9)
    assert abs(phi[0]) < 1e-8 and abs(phi[1]) < 1e-11
    assert np.all(np.diff(np.abs(phi)) < 0)


@pytest.mark.parametrize("eta,l,nr", [(50, 0, 0), (100, 2, 3), (200, 1, 1)])
def test_normalisation_by_independent_quadrature(eta, l, nr):
    wf = wavefunction(eta, l, nr)
    f = lambda r: r * r * evaluate_phi(wf, r) ** 2
    inside, _ = quad(f, 0, eta, limit=200, epsrel=1e-12)
    outside, _ = quad(f, eta, np.inf, limit=400, epsrel=1e-12)
    assert inside + outside == pytest.approx(1.0, abs=1e-8)


def test_normalisation_all_states(table_states):
    for eta, l, nr in table_states:
        assert abs(norm_integral(wavefunction(eta, l, nr)) - 1.0) < 1e-8


def test_extending_the_cut_leaves_c_unchanged():
    wf = wavefunction(100, 0, 1)
    wide = _build(wf.solution, wf.params, 2 * wf.rho_max)
    inner, outer = _moment(wide.shape, 2, 100.0, 2 * wf.rho_max, wf.xi)
    assert 1 / math.sqrt(inner + outer) == pytest.approx(wf.norm_c, rel=1e-10)


def test_branch_continuity_at_shell(table_states):
    for eta, l, nr in table_states:
        wf = wavefunction(eta, l, nr)
        inside, outside = wf.branch_values(eta)
        assert abs(inside - outside) < 1e-10
        # analytic log-derivatives from each side
        d_in, d_out = wf.boundary_log_derivatives()
        assert d_in == pytest.approx(d_out, rel=1e-8, abs=1e-12)


def test_derivative_continuity_by_finite_differences(table_states):
    for eta, l, nr in table_states:
        wf = wavefunction(eta, l, nr)
        # one-sided slopes would carry O(h) truncation; continuing each branch
        # across the shell allows centred differences on both sides
        h = 1e-6 * eta
        d_in = (wf._interior(eta + h) - wf._interior(eta - h)) / (2 * h)
        d_out = (wf._exterior(eta + h) - wf._exterior(eta - h)) / (2 * h)
        scale = max(abs(d_in), abs(d_out))
        assert abs(d_in - d_out) < 1e-6 * scale


def test_node_counts_match_radial_number(table_states):
    for eta, l, nr in table_states:
        assert count_nodes(wavefunction(eta, l, nr)) == nr


def test_two_nodes_for_second_excited_s_state():
    wf = wavefunction(200, 0, 2)
    rho = np.linspace(0.5, wf.rho_max, 3000)
    phi = evaluate_phi(wf, rho)
    assert np.count_nonzero(np.signbit(phi[:-1]) != np.signbit(phi[1:])) == 2


def test_distribution_integrates_to_one():
    wf = wavefunction(200, 0, 3)
    grid = np.linspace(1e-3, wf.rho_max, 6000)
    d = distribution(wf, grid)
    assert d.shape == (6000, 2)
    assert np.all(d[:, 1] >= 0)
    assert trapezoid(d[:, 1], d[:, 0]) == pytest.approx(1.0, abs=1e-4)


def test_distribution_support_extent():
    # the nr = 3 cloud at eta = 200 extends to a few hundred Bohr radii
    wf = wavefunction(200, 0, 3)
    grid = np.linspace(1e-3, wf.rho_max, 6000)
    d = distribution(wf, grid)
    cdf = np.cumsum(d[:, 1]) * (grid[1] - grid[0])
    r99 = grid[np.searchsorted(cdf, 0.99 * cdf[-1])]
    assert 200 < r99 < 600


def test_distribution_rejects_bad_grid():
    wf = wavefunction(50, 0, 0)
    for grid in ([1.0, 0.5], [0.0, 1.0], [[1.0, 2.0]]):
        with pytest.raises(DomainError):
            distribution(wf, grid)


def test_r2_against_published_values():
    for eta, want in ref.R2_GROUND.items():
        assert r2_expectation(wavefunction(eta, 0, 0)) == pytest.approx(want, rel=5e-3)


def test_r2_grows_with_radius():
    vals = [r2_expectation(wavefunction(eta, 0, 0)) for eta in ref.ETAS]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_excitation_energies():
    for eta, (want, rel) in ref.EXCITATION_RY.items():
        assert excitation_energy(ShellParams(eta)) == pytest.approx(want, rel=rel)


def test_excitation_shrinks_with_radius():
    vals = [excitation_energy(ShellParams(eta)) for eta in ref.ETAS]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_first_excited_state_is_p_like():
    for eta in ref.ETAS:
        others = [level(eta, l, nr).xi for l in range(3) for nr in range(4) if (l, nr) not in ((0, 0), (1, 0))]
        assert level(eta, 1, 0).xi > max(others)


def test_observables_report():
    rep = observables(ShellParams(50))
    assert [(s.l, s.nr) for s in rep.states] == [(0, 0), (1, 0)]
    assert rep.delta_e_ry == pytest.approx(rep.states[0].xi ** 2 - rep.states[1].xi ** 2)
    assert rep.omega_thz == pytest.approx(transition_frequency_thz(rep.delta_e_ry))
    # 1 Ry / hbar is about 2.07e16 s^-1
    assert transition_frequency_thz(1.0) == pytest.approx(2.067e4, rel=1e-3)
