"""
Literal evaluation of the printed closed forms for (III) and (I).

These numbers are informational: they are diffed against the engine
values and reported, never used to accept or reject a result.
"""

from fractions import Fraction
from math import factorial
from typing import List

from app.core.exact_arith import bernoulli_paper, pochhammer, todd_coefficient
from app.terms.hodge import boundary_first, hodge_top
from app.terms.schema import ReportedClosedForms


def _series_mul_trunc(p: List[Fraction], q: List[Fraction], order: int) -> List[Fraction]:
    """Truncated product (mod x^{order+1})."""
    out = [Fraction(0)] * (order + 1)
    for i, pi in enumerate(p[: order + 1]):
        if not pi:
            continue
        for j in range(min(order - i, len(q) - 1) + 1):
            out[i + j] += pi * q[j]
    return out


def formula_III(g: int) -> Fraction:
    """The printed Pochhammer double-sum expression for (III) at N = 2g - 1."""
    sign = 1 if g % 2 else -1
    first = Fraction(sign * (4 * g * g - 8 * g + 7) * factorial(2 * g - 4), 12 * (2 * g - 1))
    second = Fraction(16 ** g * factorial(g - 2) * factorial(g - 1), 192 * (2 * g - 1))

    base = Fraction(5, 2) - g
    inner = Fraction(0)
    for a in range(1, 2 * g - 2):
        shifted = Fraction(3, 2) - g + a
        for k in range(1, 2 * g - 1 - a):
            term_sign = -1 if (g + a + k + 1) % 2 else 1
            numer = term_sign * pochhammer(shifted, k)
            denom = (k + 1) * factorial(2 * g - a - k - 2) * factorial(a) * pochhammer(base, k)
            inner += numer / denom
    third = Fraction(factorial(2 * g - 1) * factorial(2 * g - 4), 12) * inner
    return first + second + third


def _leading_I(g: int) -> Fraction:
    return Fraction(factorial(2 * g - 2), 2 ** g * factorial(g - 1)) * boundary_first(g - 1)


def proposition_I(g: int) -> Fraction:
    """The printed Bernoulli single-sum expression for (I)."""
    total = Fraction(0)
    for m in range(1, g):
        sign = -1 if m % 2 else 1
        total += sign * Fraction(2) ** (2 * m + 2 - 2 * g) * bernoulli_paper(m) / (
            factorial(2 * g - 2 * m - 1) * factorial(2 * m)
        )
    g_sign = -1 if g % 2 else 1
    return _leading_I(g) + g_sign * factorial(2 * g - 3) * hodge_top(g - 2) * total


def corollary_I(g: int) -> Fraction:
    """The printed generating-function expression for (I)."""
    order = 2 * g - 1
    todd_part = [Fraction(0)] * (order + 1)
    for k in range(2, order + 1):
        todd_part[k] = todd_coefficient(k) * 2 ** k
    expm1_over_x = [Fraction(1, factorial(k + 1)) for k in range(order + 1)]
    coeff = _series_mul_trunc(todd_part, expm1_over_x, order)[order]
    g_sign = -1 if g % 2 else 1
    return _leading_I(g) - g_sign * Fraction(2) ** (2 - 2 * g) * factorial(2 * g - 3) * hodge_top(g - 2) * coeff


def reported_closed_forms(g: int) -> ReportedClosedForms:
    """Evaluate the three printed closed forms at genus g."""
    if g < 2:
        raise ValueError(f"reported_closed_forms needs g >= 2, got {g}")
    return ReportedClosedForms(
        g=g,
        formulaIII=formula_III(g),
        corollaryI=corollary_I(g),
        propositionI=proposition_I(g),
    )
