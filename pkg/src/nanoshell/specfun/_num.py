"""Elementary functions that work for both floats and mpmath numbers.

The special-function kernels only need arithmetic plus the handful of
functions below, so running them on ``mpmath.mpf`` inputs gives the same
algorithms at extended precision.
"""

import math

import mpmath


def is_mp(x) -> bool:
    return isinstance(x, mpmath.mpf)


def log(x):
    return mpmath.log(x) if is_mp(x) else math.log(x)


def sqrt(x):
    return mpmath.sqrt(x) if is_mp(x) else math.sqrt(x)


def exp(x):
    return mpmath.exp(x) if is_mp(x) else math.exp(x)


def sin(x):
    return mpmath.sin(x) if is_mp(x) else math.sin(x)


def cos(x):
    return mpmath.cos(x) if is_mp(x) else math.cos(x)


def isfinite(x) -> bool:
    return mpmath.isfinite(x) if is_mp(x) else math.isfinite(x)


def sign(x) -> int:
    return int(x > 0) - int(x < 0)


def eps(*xs):
    """Relative truncation threshold matched to the working precision."""
    if any(is_mp(x) for x in xs):
        return mpmath.mpf(10) ** (-(mpmath.mp.dps + 1))
    return 1e-17


def digits(*xs) -> int:
    return mpmath.mp.dps if any(is_mp(x) for x in xs) else 16


def like(x, *refs):
    """``x`` converted to mpmath when any of ``refs`` is an mpmath number."""
    return mpmath.mpf(x) if any(is_mp(r) for r in refs) else x
