"""Symbolic Neron-Severi rings of Delta and Y with their pushforwards."""

from app.ring.delta_poly import DeltaPoly
from app.ring.y_poly import YPoly, y_canonicalize
from app.ring.pushforward import (
    f_push,
    h_push,
    h_push_product,
    linear_power,
    poincare_recursion_residual,
    restrict_to_infinity_section,
    restrict_to_zero_section,
    shift_power_of_t1,
    shift_pullback,
    shift_pullback_iterated,
    theta_on_delta,
    theta_on_y,
    y_linear_power,
    y_pi_push,
    y_pi_push_product,
)

__all__ = [
    "DeltaPoly",
    "YPoly",
    "y_canonicalize",
    "f_push",
    "h_push",
    "h_push_product",
    "linear_power",
    "poincare_recursion_residual",
    "restrict_to_infinity_section",
    "restrict_to_zero_section",
    "shift_power_of_t1",
    "shift_pullback",
    "shift_pullback_iterated",
    "theta_on_delta",
    "theta_on_y",
    "y_linear_power",
    "y_pi_push",
    "y_pi_push_product",
]
