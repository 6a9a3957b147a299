"""
Named coefficient families, each with two independent evaluation paths.
"""

from app.coefficients.half_gamma import HalfIntGamma, gamma_ratio
from app.coefficients.c_coeff import (
    alternating_c_sum,
    alternating_c_sum_reported,
    c_coeff,
    c_coeff_gamma,
)
from app.coefficients.todd_pair import todd_pair_closed, todd_pair_coeff
from app.coefficients.level_cover import TERM_FACTORS, BoundaryTerm, level_ratio

__all__ = [
    "HalfIntGamma",
    "gamma_ratio",
    "alternating_c_sum",
    "alternating_c_sum_reported",
    "c_coeff",
    "c_coeff_gamma",
    "todd_pair_closed",
    "todd_pair_coeff",
    "TERM_FACTORS",
    "BoundaryTerm",
    "level_ratio",
]
