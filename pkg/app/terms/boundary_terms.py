"""
The three boundary contributions (I), (II), (III) to a_N^{(g)} for
2g - 1 <= N < 3g - 3.

Each term is computed through the symbolic engine: the integrands are
expanded as polynomials on Delta or Y and pushed down to A_{g-2}. The
printed closed form of (II) is exposed as `term_II_closed`, and the
symmetric half-sum of (II) over C_g^{a,b} as a third path.
"""

import logging
from fractions import Fraction
from math import comb, factorial

from app.coefficients import todd_pair
from app.coefficients.c_coeff import c_coeff
from app.coefficients.level_cover import TERM_FACTORS, BoundaryTerm
from app.core.exact_arith import binomial, multinomial
from app.ring.pushforward import h_push_product, linear_power, y_linear_power, y_pi_push_product
from app.terms.errors import OutOfRangeError
from app.terms.hodge import hodge_top, low_range_value

logger = logging.getLogger(__name__)

# Delta carries an extra involution acting trivially on the variety
_DELTA_STACK_FACTOR = Fraction(1, 2)


def check_three_term_range(g: int, n: int) -> None:
    """Raise OutOfRangeError unless 2g-1 <= N < 3g-3 (or g = 2, N = 3)."""
    if g < 2:
        raise OutOfRangeError(g, n, "genus must be at least 2")
    if n < 2 * g - 1:
        raise OutOfRangeError(g, n, f"boundary terms need N >= 2g-1 = {2 * g - 1}")
    if n >= 3 * g - 3 and not (g == 2 and n == 3):
        raise OutOfRangeError(g, n, f"N must stay below 3g-3 = {3 * g - 3}")


def _delta_divisor_power(t1: int, t2: int, exponent: int):
    """(t1 T1 + t2 T2 - P)^exponent, the boundary restrictions on Delta."""
    return linear_power(t1, t2, -1, exponent)


def term_III(g: int, n: int) -> Fraction:
    """(III): 1/12 sum binom(N; a,b,c) <L^{G-N} (-2T2-P)^{a-1} (-2T1-P)^{b-1} P^{c-1}>_Delta."""
    check_three_term_range(g, n)
    total = Fraction(0)
    for a in range(1, n - 1):
        left = _delta_divisor_power(0, -2, a - 1)
        for b in range(1, n - a):
            c = n - a - b
            right = _delta_divisor_power(-2, 0, b - 1).times_monomial(k=c - 1)
            pushed = h_push_product(left, right, g)
            if pushed:
                total += multinomial(n, a, b, c) * pushed
    return TERM_FACTORS[BoundaryTerm.III] * hodge_top(g - 2) * total


def term_III_coefficient_sum(g: int) -> Fraction:
    """(III) at N = 2g - 1 as 1/12 sum binom(N; a,b,c) C_g^{a,b} a_0^{(g-2)}."""
    if g < 2:
        raise ValueError(f"term_III_coefficient_sum needs g >= 2, got {g}")
    n = 2 * g - 1
    total = sum(
        (
            multinomial(n, a, b, n - a - b) * c_coeff(g, a, b)
            for a in range(1, n - 1)
            for b in range(1, n - a)
        ),
        Fraction(0),
    )
    return TERM_FACTORS[BoundaryTerm.III] * hodge_top(g - 2) * total


def term_II(g: int, n: int) -> Fraction:
    """(II): 1/8 sum binom(N, a) <L^{G-N} (-2xi-2T2+P)^{a-1} (-2xi-2T1+P)^{b-1}>_Y."""
    check_three_term_range(g, n)
    total = Fraction(0)
    for a in range(1, n):
        b = n - a
        left = y_linear_power(-2, 0, -2, 1, a - 1)
        right = y_linear_power(-2, -2, 0, 1, b - 1)
        pushed = y_pi_push_product(left, right, g)
        if pushed:
            total += binomial(n, a) * pushed
    return TERM_FACTORS[BoundaryTerm.II] * hodge_top(g - 2) * total


def term_II_closed(g: int) -> Fraction:
    """Closed form of (II) at N = 2g - 1."""
    if g < 2:
        raise ValueError(f"term_II_closed needs g >= 2, got {g}")
    sign = -1 if g % 2 else 1
    bracket = 2 ** (4 * g) * factorial(g - 1) * factorial(g - 2) + 32 * sign * factorial(2 * g - 3)
    return -hodge_top(g - 2) * Fraction(bracket, 64 * (2 * g - 1))


def term_II_symmetric_sum(g: int) -> Fraction:
    """(II) at N = 2g - 1 as 1/2 sum_{a<g} binom(2g-1, a) C_g^{a,2g-1-a} a_0^{(g-2)}."""
    if g < 2:
        raise ValueError(f"term_II_symmetric_sum needs g >= 2, got {g}")
    total = sum(
        (comb(2 * g - 1, a) * c_coeff(g, a, 2 * g - 1 - a) for a in range(1, g)),
        Fraction(0),
    )
    return Fraction(1, 2) * total * hodge_top(g - 2)


def term_I(g: int, n: int) -> Fraction:
    """
    (I) = 1/2 (-2)^{N-1} <L^{G-N} pi_*(Theta^{N-1})> on the partial universal family.

    pi_*(Theta^{N-1}) is read off from pi_*(e^Theta F) = e^{D/8}, where F
    is the inverse dual Todd class of Delta (E = P, F = -2T2 - P) and
    Theta restricts to T1 + P/2 on Delta.
    """
    check_three_term_range(g, n)
    lower = low_range_value(g - 1, n - g)
    leading = lower / (8 ** (n - g) * factorial(n - g))

    correction = Fraction(0)
    for k in range(1, n):
        theta_part = linear_power(1, 0, Fraction(1, 2), n - 1 - k)
        for m in range(1, k):
            coeff = todd_pair.todd_pair_closed(m, k - m)
            if not coeff:
                continue
            normal_part = _delta_divisor_power(0, -2, k - m - 1).times_monomial(k=m - 1)
            pushed = h_push_product(theta_part, normal_part, g)
            if pushed:
                correction += coeff / factorial(n - 1 - k) * pushed
    correction *= _DELTA_STACK_FACTOR * hodge_top(g - 2)
    logger.debug(f"term_I g={g} N={n}: leading={leading} correction={correction}")

    sign = -1 if (n - 1) % 2 else 1
    prefactor = sign * Fraction(2) ** (n - 2) * factorial(n - 1)
    return prefactor * (leading - correction)
