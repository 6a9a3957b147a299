"""
Exact rational arithmetic and special values.

Every number in the package is a `fractions.Fraction`: factorials,
Bernoulli numbers (modern signed convention as the single source of
truth, with the unsigned variant and the Todd coefficients derived from
it), zeta at negative odd integers and the level cover group orders.
"""

import threading
from fractions import Fraction
from math import comb
from typing import List

Rational = Fraction

__all__ = [
    "Rational",
    "factorial",
    "double_factorial_odd",
    "binomial",
    "multinomial",
    "pochhammer",
    "bernoulli_modern",
    "bernoulli_paper",
    "todd_coefficient",
    "zeta_negative_odd",
    "sp_group_order",
    "boundary_component_count",
    "to_pq",
    "from_pq",
]

# Memo tables only ever grow; appends happen under the lock and readers
# only index below the published length.
_lock = threading.Lock()
_factorials: List[int] = [1]
_bernoulli: List[Fraction] = [Fraction(1)]


def _factorial_int(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial needs n >= 0, got {n}")
    if n < len(_factorials):
        return _factorials[n]
    with _lock:
        while len(_factorials) <= n:
            _factorials.append(_factorials[-1] * len(_factorials))
    return _factorials[n]


def factorial(n: int) -> Rational:
    """n! as an exact integer-valued Fraction (memoized)."""
    return Fraction(_factorial_int(n))


def double_factorial_odd(k: int) -> Rational:
    """(2k-1)!! = 1*3*...*(2k-1), with (-1)!! = 1."""
    if k < 0:
        raise ValueError(f"double_factorial_odd needs k >= 0, got {k}")
    value = 1
    for odd in range(1, 2 * k, 2):
        value *= odd
    return Fraction(value)


def binomial(n: int, k: int) -> Rational:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(comb(n, k))


def multinomial(n: int, a: int, b: int, c: int) -> Rational:
    """N!/(a! b! c!) for a + b + c = n."""
    if min(a, b, c) < 0 or a + b + c != n:
        raise ValueError(f"multinomial needs a+b+c=n with parts >= 0, got {n}; {a},{b},{c}")
    return Fraction(
        _factorial_int(n),
        _factorial_int(a) * _factorial_int(b) * _factorial_int(c),
    )


def pochhammer(z: Rational, k: int) -> Rational:
    """Rising factorial [z]_k = z (z+1) ... (z+k-1); [z]_0 = 1."""
    if k < 0:
        raise ValueError(f"pochhammer needs k >= 0, got {k}")
    z = Fraction(z)
    value = Fraction(1)
    for step in range(k):
        value *= z + step
    return value


def bernoulli_modern(n: int) -> Rational:
    """
    Modern Bernoulli number B_n (B_1 = -1/2, generating function x/(e^x - 1)).

    Built from sum_{j=0}^{m} C(m+1, j) B_j = 0 and memoized.
    """
    if n < 0:
        raise ValueError(f"bernoulli_modern needs n >= 0, got {n}")
    if n < len(_bernoulli):
        return _bernoulli[n]
    with _lock:
        while len(_bernoulli) <= n:
            m = len(_bernoulli)
            if m >= 3 and m % 2 == 1:
                _bernoulli.append(Fraction(0))
                continue
            acc = sum(
                (comb(m + 1, j) * _bernoulli[j] for j in range(m)),
                Fraction(0),
            )
            _bernoulli.append(-acc / (m + 1))
    return _bernoulli[n]


def bernoulli_paper(k: int) -> Rational:
    """Unsigned Bernoulli number B_k = |B_{2k}| used in the Todd expansion."""
    if k < 1:
        raise ValueError(f"bernoulli_paper needs k >= 1, got {k}")
    sign = 1 if k % 2 == 1 else -1
    return sign * bernoulli_modern(2 * k)


def todd_coefficient(n: int) -> Rational:
    """Coefficient b_n of x/(1 - e^{-x})."""
    if n < 0:
        raise ValueError(f"todd_coefficient needs n >= 0, got {n}")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(1, 2)
    if n % 2 == 1:
        return Fraction(0)
    k = n // 2
    sign = 1 if k % 2 == 1 else -1
    return sign * bernoulli_paper(k) / _factorial_int(n)


def zeta_negative_odd(k: int) -> Rational:
    """zeta(1 - 2k) = -B_{2k}/(2k)."""
    if k < 1:
        raise ValueError(f"zeta_negative_odd needs k >= 1, got {k}")
    return -bernoulli_modern(2 * k) / (2 * k)


def sp_group_order(g: int, ell: int) -> int:
    """|Sp(2g, Z/ell)| = ell^{g^2} prod_{i=1}^{g} (ell^{2i} - 1); 1 for g = 0."""
    if g < 0:
        raise ValueError(f"sp_group_order needs g >= 0, got {g}")
    order = ell ** (g * g)
    for i in range(1, g + 1):
        order *= ell ** (2 * i) - 1
    return order


def boundary_component_count(g: int, ell: int) -> Rational:
    """Number of boundary components of the level-ell cover: (ell^{2g} - 1)/2."""
    return Fraction(ell ** (2 * g) - 1, 2)


def to_pq(value: Rational) -> str:
    """Serialize as "p/q" (or "p" when q = 1), sign on the numerator."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def from_pq(text: str) -> Rational:
    """Parse the "p/q" wire format back into a Fraction."""
    return Fraction(text.strip())
