"""
Assembly of a_N^{(g)} over the computed range.

N <= 2g - 2 comes from the closed forms on the partial compactification;
2g - 1 <= N < 3g - 3 is the sum of the three boundary terms. The one
exception to the upper bound is (g, N) = (2, 3), which is computed and
flagged formal.
"""

import logging
from fractions import Fraction
from typing import List, Tuple

from app.terms.boundary_terms import check_three_term_range, term_I, term_II, term_III
from app.terms.errors import OutOfRangeError
from app.terms.hodge import low_range_value, moduli_dimension
from app.terms.schema import TermBreakdown, TermValues

logger = logging.getLogger(__name__)


def table_range(g: int) -> List[int]:
    """N values the table covers: 0..3 for g = 2, else 0..3g-4."""
    if g < 2:
        raise OutOfRangeError(g, 0, "genus must be at least 2")
    top = 3 if g == 2 else 3 * g - 4
    return list(range(top + 1))


def _check_range(g: int, n: int) -> None:
    if g < 2:
        raise OutOfRangeError(g, n, "genus must be at least 2")
    if n < 0:
        raise OutOfRangeError(g, n, "N must be non-negative")
    if n >= 2 * g - 1:
        check_three_term_range(g, n)


def three_terms(g: int, n: int) -> Tuple[Fraction, Fraction, Fraction]:
    """(I, II, III) at (g, N)."""
    check_three_term_range(g, n)
    first = term_I(g, n)
    second = term_II(g, n)
    third = term_III(g, n)
    logger.debug(f"g={g} N={n}: I={first} II={second} III={third}")
    return first, second, third


def assemble(g: int, n: int) -> TermBreakdown:
    """Compute a_N^{(g)} together with its breakdown."""
    _check_range(g, n)
    big_g = moduli_dimension(g)

    if n <= 2 * g - 2:
        value = low_range_value(g, n)
        return TermBreakdown(
            genus=g, N=n, G=big_g, value=value, terms=None, formal=False, method="closed-form",
        )

    first, second, third = three_terms(g, n)
    formal = n >= 3 * g - 3
    if formal:
        logger.warning(f"g={g} N={n} lies at or above 3g-3; value is formal")
    return TermBreakdown(
        genus=g,
        N=n,
        G=big_g,
        value=first + second + third,
        terms=TermValues(I=first, II=second, III=third),
        formal=formal,
        method="engine",
    )


def intersection_number(g: int, n: int) -> Fraction:
    """a_N^{(g)} as a bare rational."""
    return assemble(g, n).value
