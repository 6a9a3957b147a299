"""
The coefficients C_g^{a,b}: pushforward of the triple-boundary integrand.

`c_coeff` evaluates the defining finite sum and is authoritative;
`c_coeff_gamma` evaluates the half-integer Gamma closed form and serves
as the verification path.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from app.coefficients.half_gamma import gamma_ratio


def _check_args(g: int, a: int, b: int) -> None:
    if g < 2 or a < 1 or b < 1:
        raise ValueError(f"C_g^(a,b) needs g >= 2 and a, b >= 1; got g={g}, a={a}, b={b}")


@lru_cache(maxsize=None)
def c_coeff(g: int, a: int, b: int) -> Fraction:
    """C_g^{a,b} from its defining sum; 0 when a + b > 2g - 1."""
    _check_args(g, a, b)
    if a + b > 2 * g - 1:
        return Fraction(0)
    total = 0
    for i in range(min(a - 1, b - 1) + 1):
        # (a-1)!/(i!(a-1-i)!) * (b-1)!/(b-1-i)! keeps everything integral
        numer = (-4) ** i * comb(a - 1, i) * factorial(b - 1) * factorial(2 * g - 4 - 2 * i)
        denom = factorial(b - 1 - i) * factorial(g - 2 - i)
        total += Fraction(numer, denom)
    sign = -1 if (a + b + g) % 2 else 1
    return sign * factorial(g - 2) * Fraction(total)


def c_coeff_gamma(g: int, a: int, b: int) -> Fraction:
    """
    C_g^{a,b} = (-1)^{a+b+g} (2g-4)! G(5/2-g) G(1/2+a+b-g) / (G(3/2+a-g) G(3/2+b-g)).

    All four arguments are odd half-integers, so none is a pole.
    """
    _check_args(g, a, b)
    if a + b > 2 * g - 1:
        raise ValueError(f"Gamma form only covers a + b <= 2g - 1; got a + b = {a + b}, g = {g}")
    ratio = gamma_ratio((2 - g, a + b - g), (a + 1 - g, b + 1 - g))
    sign = -1 if (a + b + g) % 2 else 1
    return sign * factorial(2 * g - 4) * ratio


def alternating_c_sum(g: int, m: int) -> Fraction:
    """sum_{n=1}^{2m-1} (-1)^n C_g^{2m-n, 2g-2m-1} for 1 <= m <= g-1."""
    if not 1 <= m <= g - 1:
        raise ValueError(f"alternating_c_sum needs 1 <= m <= g-1; got g={g}, m={m}")
    total = Fraction(0)
    for n in range(1, 2 * m):
        sign = -1 if n % 2 else 1
        total += sign * c_coeff(g, 2 * m - n, 2 * g - 2 * m - 1)
    return total


def alternating_c_sum_reported(g: int, m: int) -> Fraction:
    """Printed closed form of `alternating_c_sum`: -(2g-3)!/(2g-1-2m)."""
    return Fraction(-factorial(2 * g - 3), 2 * g - 1 - 2 * m)
