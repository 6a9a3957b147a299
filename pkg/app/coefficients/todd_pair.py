"""
Coefficients b_{n,m} of E^n F^m in the inverse dual Todd class of a
codimension-2 complete intersection E.F.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from app.core.exact_arith import bernoulli_paper, todd_coefficient


@lru_cache(maxsize=None)
def todd_pair_coeff(n: int, m: int) -> Fraction:
    """b_{n,m} from its defining double sum."""
    if n < 0 or m < 0:
        raise ValueError(f"todd_pair_coeff needs n, m >= 0; got {n}, {m}")
    total = Fraction(0)
    for i in range(n + 1):
        b_i = todd_coefficient(i)
        if not b_i:
            continue
        for j in range(m + 1):
            b_j = todd_coefficient(j)
            if not b_j:
                continue
            rest = n + m - i - j
            sign = -1 if rest % 2 else 1
            total += sign * b_i * b_j / ((rest + 1) * factorial(n - i) * factorial(m - j))
    return total


def todd_pair_closed(n: int, m: int) -> Fraction:
    """b_{n,m} = (-1)^{(n-m)/2} B_{(n+m)/2} / (n+m)! for n+m even, nm != 0."""
    if n < 0 or m < 0:
        raise ValueError(f"todd_pair_closed needs n, m >= 0; got {n}, {m}")
    if n == 0 and m == 0:
        return Fraction(1)
    if (n + m) % 2 or n * m == 0:
        return Fraction(0)
    sign = -1 if ((n - m) // 2) % 2 else 1
    return sign * bernoulli_paper((n + m) // 2) / factorial(n + m)
