"""Bound states of an electron around a positively charged nanoshell.

Levels come from three independent routes: the special-function dispersion
relation (:mod:`nanoshell.exact`), semiclassical quantization
(:mod:`nanoshell.wkb`) and direct ODE shooting (:mod:`nanoshell.oracle`).
"""

from .errors import (
    ConvergenceError,
    DomainError,
    NanoshellError,
    NoRootError,
    PoleError,
    RegimeError,
    ShootingError,
    WindowError,
)
from .exact import EigenSolution, dispersion, find_level, find_levels, hydrogen_limit_check
from .model import EnergyWindow, QuantumNumbers, ShellParams, SquareWell, energy_from_xi, potential_value
from .oracle import ShootingResult, oracle_level, shoot
from .wavefunction import (
    ObservableReport,
    RadialWavefunction,
    distribution,
    evaluate_phi,
    excitation_energy,
    normalize,
    r2_expectation,
)
from .wkb import WkbLevel, turning_points, wkb_level, xi_eta_slope

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DomainError",
    "EigenSolution",
    "EnergyWindow",
    "NanoshellError",
    "NoRootError",
    "ObservableReport",
    "PoleError",
    "QuantumNumbers",
    "RadialWavefunction",
    "RegimeError",
    "ShellParams",
    "ShootingError",
    "ShootingResult",
    "SquareWell",
    "WindowError",
    "WkbLevel",
    "dispersion",
    "distribution",
    "energy_from_xi",
    "evaluate_phi",
    "excitation_energy",
    "find_level",
    "find_levels",
    "hydrogen_limit_check",
    "normalize",
    "oracle_level",
    "potential_value",
    "r2_expectation",
    "shoot",
    "turning_points",
    "wkb_level",
    "xi_eta_slope",
]
