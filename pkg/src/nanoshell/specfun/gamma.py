"""Log-Gamma with an explicit sign channel."""

from __future__ import annotations

import math

from ..errors import PoleError


def ln_gamma(x: float) -> tuple[float, int]:
    """Return ``(ln|Gamma(x)|, sign(Gamma(x)))``.

    Raises :class:`PoleError` at the poles ``x = 0, -1, -2, ...``.
    """
    if x <= 0 and x == math.floor(x):
        raise PoleError(f"Gamma has a pole at {x}")
    if x > 0:
        return math.lgamma(x), 1
    # Gamma alternates sign between consecutive negative integers.
    sign = -1 if math.floor(x) % 2 else 1
    return math.lgamma(x), sign
