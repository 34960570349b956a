import math

import numpy as np
import pytest

from nanoshell import reference as ref
from nanoshell.errors import DomainError, RegimeError
from nanoshell.model import QuantumNumbers, ShellParams
from nanoshell.wkb import (
    Deviation,
    Orbit,
    Regime,
    hydrogen_window,
    momentum_squared,
    phase_integral,
    phase_level,
    quantization_residual,
    turning_points,
    wkb_level,
    wkb_vs_exact,
    xi_eta_slope,
)


def test_wkb_table_anchors():
    assert wkb_level(ShellParams(50), QuantumNumbers(0, 0)).xi == pytest.approx(0.19497, abs=1e-4)
    assert wkb_level(ShellParams(200), QuantumNumbers(2, 3)).xi == pytest.approx(0.08206, abs=1e-4)


def test_wkb_table_all_entries():
    for eta, l, nr in ref.states():
        lv = wkb_level(ShellParams(eta), QuantumNumbers(l, nr))
        assert lv.regime is Regime.TRANSCENDENTAL
        assert lv.xi == pytest.approx(ref.WKB_XI[eta][nr][l], abs=1e-4)


def test_solved_levels_satisfy_closed_form_and_window():
    for eta, l, nr in ref.states():
        p, qn = ShellParams(eta), QuantumNumbers(l, nr)
        lv = wkb_level(p, qn)
        assert abs(quantization_residual(p, qn, lv.xi)) < 1e-8
        # the inner turning point lies in the shell and the outer one beyond it
        tp = lv.turning_points
        assert tp.orbit is Orbit.TWO_PIECE and tp.inner <= eta <= tp.outer
        assert lv.xi * qn.big_l < 1 and lv.xi**2 < 2 / eta


def test_residual_at_printed_value_is_small():
    # the printed value is a rounded root; the residual there is ~2e-4
    res = quantization_residual(ShellParams(50), QuantumNumbers(0, 0), 0.19497)
    assert 0 < abs(res) < 1e-3


def test_turning_points_for_table_state():
    tp = turning_points(ShellParams(50), 0, 0.19497)
    assert tp.orbit is Orbit.TWO_PIECE
    assert tp.inner == pytest.approx(0.5 / math.sqrt(0.04 - 0.19497**2), rel=1e-12)
    assert tp.inner == pytest.approx(11.22, abs=5e-3)


def test_turning_points_of_a_tiny_shell():
    # lower Coulomb point 1 - sqrt(0.75) = 0.134 sits inside eta = 0.2, so
    # the orbit still crosses the shell
    tp = turning_points(ShellParams(0.2), 0, 1.0)
    assert tp.orbit is Orbit.TWO_PIECE
    assert tp.inner == pytest.approx(0.5 / 3.0)
    assert tp.outer == pytest.approx(1 + math.sqrt(0.75))


def test_coulomb_orbit_and_circular_limit():
    big_l = 1.5
    xi = (1 / big_l) * (1 - 1e-10)
    tp = turning_points(ShellParams(0.01), 1, xi)
    assert tp.orbit is Orbit.COULOMB
    assert tp.inner == pytest.approx(xi**-2, rel=1e-4)
    assert tp.outer == pytest.approx(xi**-2, rel=1e-4)


def test_no_classical_region():
    with pytest.raises(RegimeError):
        turning_points(ShellParams(0.01), 1, 1 / 1.5)


def test_momentum_vanishes_at_turning_points():
    for eta, l, nr in ref.states():
        p = ShellParams(eta)
        lv = wkb_level(p, QuantumNumbers(l, nr))
        for rho in (lv.turning_points.inner, lv.turning_points.outer):
            assert abs(momentum_squared(p, l, lv.xi, rho)) < 1e-10


def test_closed_form_equals_phase_integral():
    p, qn = ShellParams(100), QuantumNumbers(1, 2)
    for xi in np.linspace(0.09, 0.135, 7):
        phase = phase_integral(p, qn.l, xi)
        assert quantization_residual(p, qn, xi) * qn.big_l == pytest.approx(phase - math.pi * (qn.nr + 0.5), abs=1e-10)


@pytest.mark.parametrize("eta,l,nr", [(50, 0, 0), (100, 2, 3), (200, 1, 2)])
def test_phase_level_agrees_with_closed_form(eta, l, nr):
    p, qn = ShellParams(eta), QuantumNumbers(l, nr)
    assert phase_level(p, qn) == pytest.approx(wkb_level(p, qn).xi, abs=1e-6)


def test_hydrogen_window_branch():
    p, qn = ShellParams(1.0), QuantumNumbers(2, 0)
    lo, hi = hydrogen_window(p, qn)
    assert lo <= 1 / 9 <= hi
    lv = wkb_level(p, qn)
    assert lv.regime is Regime.HYDROGEN_WINDOW and lv.xi == 1 / 3


def test_hydrogen_window_is_empty_for_table_shells():
    for eta in ref.ETAS:
        lo, hi = hydrogen_window(ShellParams(eta), QuantumNumbers(0, 0))
        assert lo > hi


def test_slopes_negative_on_grid():
    for eta in (50, 75, 100, 125, 150, 175, 200):
        for l in range(3):
            for nr in range(4):
                assert xi_eta_slope(ShellParams(eta), QuantumNumbers(l, nr)) < 0


def test_slope_converges_with_step():
    p, qn = ShellParams(100), QuantumNumbers(0, 0)
    coarse = xi_eta_slope(p, qn, h=0.2)
    fine = xi_eta_slope(p, qn, h=0.1)
    assert fine == pytest.approx(coarse, rel=1e-2)
    with pytest.raises(DomainError):
        xi_eta_slope(p, qn, h=0.0)


def test_deviation_table():
    table = wkb_vs_exact(ShellParams(50), 2, 3)
    assert len(table.rows) == 12
    assert table.max_dev < 1.5e-3
    first = next(r for r in table.rows if r.qn == QuantumNumbers(0, 0))
    assert first.abs_dev == pytest.approx(6.8e-4, abs=5e-5)


def test_self_comparison_is_zero():
    assert Deviation(QuantumNumbers(0, 0), 0.19429, 0.19429).abs_dev == 0.0
