"""
Intersection numbers that live on the partial compactification.

Hirzebruch-Mumford proportionality gives the top Hodge power a_0; the
boundary enters first at N = g. Everything else with N <= 2g - 2
vanishes.
"""

from fractions import Fraction
from math import factorial
from typing import List

from app.core.exact_arith import double_factorial_odd, zeta_negative_odd


def moduli_dimension(g: int) -> int:
    """G = dim A_g = g(g+1)/2."""
    return g * (g + 1) // 2


def _zeta_product(upto: int) -> Fraction:
    value = Fraction(1)
    for k in range(1, upto + 1):
        value *= zeta_negative_odd(k) / double_factorial_odd(k)
    return value


def hodge_top(g: int) -> Fraction:
    """a_0^{(g)} = (-1)^G 2^{-g} G! prod_{k=1}^{g} zeta(1-2k)/(2k-1)!!; 1 for g = 0."""
    if g < 0:
        raise ValueError(f"hodge_top needs g >= 0, got {g}")
    big_g = moduli_dimension(g)
    sign = -1 if big_g % 2 else 1
    return sign * Fraction(factorial(big_g), 2 ** g) * _zeta_product(g)


def boundary_first(g: int) -> Fraction:
    """a_g^{(g)} = 1/2 (-2)^{g-1} (g-1)! a_0^{(g-1)}."""
    if g < 1:
        raise ValueError(f"boundary_first needs g >= 1, got {g}")
    return Fraction(1, 2) * (-2) ** (g - 1) * factorial(g - 1) * hodge_top(g - 1)


def boundary_first_direct(g: int) -> Fraction:
    """a_g^{(g)} as 1/2 (-1)^{G-1} (g-1)! (G-g)! prod_{k<g} zeta(1-2k)/(2k-1)!!."""
    if g < 1:
        raise ValueError(f"boundary_first_direct needs g >= 1, got {g}")
    big_g = moduli_dimension(g)
    sign = -1 if (big_g - 1) % 2 else 1
    return Fraction(sign * factorial(g - 1) * factorial(big_g - g), 2) * _zeta_product(g - 1)


def low_range_value(g: int, n: int) -> Fraction:
    """
    a_N^{(g)} for N <= 2g - 2 (and N = g when g = 1).

    N = 0 and N = g are the only non-zero values; the rest vanish because
    L^{G-N} dies on the deeper boundary strata.
    """
    if g < 1 or n < 0 or (n > 2 * g - 2 and n != g):
        raise ValueError(f"low_range_value covers 0 <= N <= 2g-2; got g={g}, N={n}")
    if n == 0:
        return hodge_top(g)
    if n == g:
        return boundary_first(g)
    return Fraction(0)


def conjecture_pattern(g: int) -> List[int]:
    """N in the computed range with G - N = dim A_k for some k <= g."""
    big_g = moduli_dimension(g)
    dims = {moduli_dimension(k) for k in range(g + 1)}
    top = 3 if g == 2 else 3 * g - 4
    return [n for n in range(top + 1) if big_g - n in dims]
