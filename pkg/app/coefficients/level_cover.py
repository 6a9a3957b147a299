"""
Multiplicity ratios of the level-ell cover.

Each ratio compares the boundary strata of the level cover with their
images without level; the results are the constants 1/2, 1/8 and 1/12
used when the three boundary terms are assembled. Computing them for
several ell certifies that the constants do not depend on the level.
"""

from enum import Enum
from fractions import Fraction

from app.core.exact_arith import boundary_component_count, sp_group_order


class BoundaryTerm(str, Enum):
    """The three boundary contributions: one, two or three components meeting."""

    I = "I"
    II = "II"
    III = "III"


# Constants used by the assembly; `level_ratio` must reproduce them
TERM_FACTORS = {
    BoundaryTerm.I: Fraction(1, 2),
    BoundaryTerm.II: Fraction(1, 8),
    BoundaryTerm.III: Fraction(1, 12),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    divisor = 2
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 1
    return True


def level_ratio(which, g: int, ell: int) -> Fraction:
    """Ratio ell^k d_k e_k / nu_g for the requested boundary term."""
    which = BoundaryTerm(which)
    if isinstance(ell, bool) or not isinstance(ell, int):
        raise ValueError(f"level must be an integer, got {ell!r}")
    if ell < 3 or not _is_prime(ell):
        raise ValueError(f"level must be a prime >= 3, got {ell}")
    if g < 2:
        raise ValueError(f"level_ratio needs g >= 2, got {g}")

    nu_g = sp_group_order(g, ell)
    d_g = boundary_component_count(g, ell)

    if which is BoundaryTerm.I:
        e_1 = sp_group_order(g - 1, ell) * ell ** (2 * g - 2)
        return ell * d_g * e_1 / nu_g

    d_g1 = boundary_component_count(g - 1, ell)
    e_2 = ell * sp_group_order(g - 2, ell) * ell ** (4 * (g - 2))
    if which is BoundaryTerm.II:
        d_2 = Fraction(ell, 2) * d_g * d_g1
        return ell ** 2 * d_2 * e_2 / nu_g

    d_3 = Fraction(ell, 3) * d_g * d_g1
    e_3 = Fraction(e_2, ell)
    return ell ** 3 * d_3 * e_3 / nu_g
