"""Special functions needed by the nanoshell solvers."""

from .bessel import (
    BesselRatio,
    spherical_bessel_j,
    spherical_bessel_pair,
    spherical_bessel_ratio,
    spherical_hankel1_imag,
)
from .confluent import (
    KummerCurve,
    UEvaluation,
    confluent_u,
    confluent_u_pair,
    confluent_u_ratio,
    laguerre,
)
from .gamma import ln_gamma

__all__ = [
    "BesselRatio",
    "KummerCurve",
    "UEvaluation",
    "confluent_u",
    "confluent_u_pair",
    "confluent_u_ratio",
    "laguerre",
    "ln_gamma",
    "spherical_bessel_j",
    "spherical_bessel_pair",
    "spherical_bessel_ratio",
    "spherical_hankel1_imag",
]
