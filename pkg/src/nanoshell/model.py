"""Units, the nanoshell potential, and the small value types shared by the solvers.

Everything is in Coulomb units: lengths in Bohr radii, potential energies in
Hartree (``E_a = 2 Ry``), and bound-state energies written as ``E = -xi**2 Ry``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# Conversion constants as printed alongside the Coulomb-unit reduction.
HARTREE_EV = 27.21
RYDBERG_EV = HARTREE_EV / 2.0
BOHR_NM = 0.053
# Reduced Planck constant, eV*s (CODATA 2018), used only for frequencies.
HBAR_EV_S = 6.582119569e-16


@dataclass(frozen=True)
class ShellParams:
    """A charged nanoshell of radius ``eta`` Bohr radii.

    The shell carries charge ``z`` (fixed at 1); inside, the potential is the
    constant ``-z/eta`` and outside it is ``-z/rho``.  Use
    :func:`rescale_for_charge` to map results to other charges.
    """

    eta: float
    z: int = 1

    def __post_init__(self):
        if not math.isfinite(self.eta) or self.eta < 0:
            raise DomainError(f"eta must be a finite non-negative number, got {self.eta!r}")
        if self.z != 1:
            raise DomainError("only z = 1 is solved directly; use rescale_for_charge")

    # The attribute trio below is what the ODE oracle needs from any
    # piecewise "constant well + Coulomb tail" problem.
    @property
    def radius(self) -> float:
        return self.eta

    @property
    def depth(self) -> float:
        """Well depth V0 = z/eta in Hartree."""
        if self.eta == 0:
            return math.inf
        return self.z / self.eta

    @property
    def alpha(self) -> float:
        """Coulomb tail strength (z e^2 in atomic units)."""
        return float(self.z)

    @property
    def xi_max(self) -> float:
        """Upper edge of the bound-state window, sqrt(2/eta)."""
        return math.sqrt(2.0 / self.eta)

    @classmethod
    def from_radius_nm(cls, radius_nm: float) -> "ShellParams":
        return cls(radius_nm / BOHR_NM)

    @property
    def radius_nm(self) -> float:
        return self.eta * BOHR_NM


@dataclass(frozen=True)
class SquareWell:
    """Spherical well of depth ``depth`` (Hartree) and radius ``radius`` (a0).

    ``alpha`` is the strength of an optional Coulomb tail outside the well; with
    ``alpha=0`` this is the textbook finite spherical well, and with
    ``depth = alpha/radius`` it coincides with :class:`ShellParams`.
    """

    radius: float
    depth: float
    alpha: float = 0.0

    def __post_init__(self):
        if self.radius <= 0 or self.depth <= 0 or self.alpha < 0:
            raise DomainError("need radius > 0, depth > 0 and alpha >= 0")

    @property
    def xi_max(self) -> float:
        return math.sqrt(2.0 * self.depth)


@dataclass(frozen=True, order=True)
class QuantumNumbers:
    l: int
    nr: int

    def __post_init__(self):
        if int(self.l) != self.l or int(self.nr) != self.nr or self.l < 0 or self.nr < 0:
            raise DomainError(f"quantum numbers must be non-negative integers, got l={self.l}, nr={self.nr}")

    @property
    def big_l(self) -> float:
        """Langer-shifted angular momentum L = l + 1/2."""
        return self.l + 0.5

    @property
    def hydrogen_n(self) -> int:
        return self.nr + self.l + 1


@dataclass(frozen=True)
class EnergyWindow:
    xi_min: float
    xi_max: float

    def __post_init__(self):
        if not 0 <= self.xi_min < self.xi_max:
            raise DomainError(f"invalid window [{self.xi_min}, {self.xi_max}]")

    @classmethod
    def for_shell(cls, params: ShellParams, xi_min: float = 0.0) -> "EnergyWindow":
        return cls(xi_min, params.xi_max)

    def __contains__(self, xi) -> bool:
        return self.xi_min < xi < self.xi_max


def potential_value(params: ShellParams, rho: float) -> float:
    """Potential energy in Hartree at radius ``rho`` (Bohr radii)."""
    if rho < 0:
        raise DomainError(f"rho must be non-negative, got {rho}")
    if params.eta <= 0:
        raise DomainError("potential_value needs eta > 0")
    if rho <= params.eta:
        return -params.z / params.eta
    return -params.z / rho


def energy_from_xi(xi: float) -> float:
    """Bound-state energy in Rydberg for the dimensionless parameter ``xi``."""
    return -xi * xi


def rescale_for_charge(xi: float, eta: float, z: float) -> tuple[float, float]:
    """Map a Z = 1 solution ``(xi, eta)`` to the shell of charge ``z``.

    A Z = 1 solution at radius ``eta`` corresponds to a charge-``z`` shell of
    radius ``eta / z`` with energy parameter ``z * xi``.
    """
    if z <= 0:
        raise DomainError("z must be positive")
    return z * xi, eta / z
