"""
Gamma at half-integers as exact multiples of sqrt(pi).

Gamma(1/2 + n) = r * sqrt(pi) with r rational. Only ratios, where the
sqrt(pi) cancels, leave this module as plain Fractions.
"""

from dataclasses import dataclass
from fractions import Fraction

from app.core.exact_arith import double_factorial_odd


@dataclass(frozen=True)
class HalfIntGamma:
    """Gamma(1/2 + n) stored as its rational multiple of sqrt(pi)."""

    n: int
    r: Fraction

    @classmethod
    def at(cls, n: int) -> "HalfIntGamma":
        if n >= 0:
            r = double_factorial_odd(n) / 2 ** n
        else:
            m = -n
            r = Fraction((-2) ** m) / double_factorial_odd(m)
        return cls(n=n, r=r)

    def __truediv__(self, other: "HalfIntGamma") -> Fraction:
        return self.r / other.r


def gamma_ratio(numerator: tuple, denominator: tuple) -> Fraction:
    """prod Gamma(1/2 + n_i) / prod Gamma(1/2 + m_j) for equally many factors."""
    if len(numerator) != len(denominator):
        raise ValueError("sqrt(pi) only cancels for equally many Gamma factors")
    value = Fraction(1)
    for n in numerator:
        value *= HalfIntGamma.at(n).r
    for m in denominator:
        value /= HalfIntGamma.at(m).r
    return value
