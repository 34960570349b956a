"""Exception types raised by the solvers."""


class NanoshellError(Exception):
    """Base class for all package errors."""


class DomainError(NanoshellError, ValueError):
    """An argument lies outside the domain of the function."""


class PoleError(DomainError):
    """Evaluation requested at a pole (e.g. Gamma at a non-positive integer)."""


class WindowError(DomainError):
    """Energy parameter outside the bound-state window 0 < xi < sqrt(2/eta)."""


class RegimeError(DomainError):
    """A semiclassical formula was used outside its regime of validity."""


class ConvergenceError(NanoshellError, RuntimeError):
    """A series, recurrence or integrator failed to reach its tolerance.

    ``method`` names the algorithm and ``residual`` the last error estimate,
    so failures can be diagnosed without rerunning.
    """

    def __init__(self, message, method=None, residual=None):
        super().__init__(message)
        self.method = method
        self.residual = residual


class NoRootError(NanoshellError, RuntimeError):
    """No sign change of a quantization condition inside the search window."""


class ShootingError(NanoshellError, RuntimeError):
    """Bad bracket passed to the shooting oracle."""
