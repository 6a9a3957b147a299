"""
Shift operator, pushforwards and the fixed divisor classes on Delta and Y.

h_push integrates over the fibers of Delta -> A_{g-2}; f_push integrates
over the P^1 fibers of Y -> Delta. Their composite is y_pi_push.
The *_product variants give the same numbers without expanding the
product, which is what keeps the large-genus sums fast.
"""

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Tuple

from app.core.exact_arith import multinomial
from app.ring.delta_poly import DeltaPoly, Scalar
from app.ring.y_poly import YPoly, y_canonicalize


# ── Shift operator ───────────────────────────────────────────────────

def shift_pullback(poly: DeltaPoly, n: int) -> DeltaPoly:
    """(s^n)^*: T1 -> T1 + n^2 T2 + n P, T2 -> T2, P -> 2n T2 + P."""
    if n < 1:
        raise ValueError(f"shift_pullback needs n >= 1, got {n}")
    return poly.substitute(
        DeltaPoly.linear(1, n * n, n),
        DeltaPoly.t2(),
        DeltaPoly.linear(0, 2 * n, 1),
    )


def shift_pullback_iterated(poly: DeltaPoly, n: int) -> DeltaPoly:
    """Apply the single step s^* n times."""
    if n < 1:
        raise ValueError(f"shift_pullback_iterated needs n >= 1, got {n}")
    step_t1 = DeltaPoly.linear(1, 1, 1)
    step_p = DeltaPoly.linear(0, 2, 1)
    for _ in range(n):
        poly = poly.substitute(step_t1, DeltaPoly.t2(), step_p)
    return poly


def shift_power_of_t1(n: int) -> DeltaPoly:
    """V_n = (s^n)^* T1."""
    return shift_pullback(DeltaPoly.t1(), n)


# ── Pushforward to A_{g-2} ───────────────────────────────────────────

@lru_cache(maxsize=None)
def _push_value(g: int, k: int) -> Fraction:
    """h_*(T1^{g-2-k} T2^{g-2-k} P^{2k}) for 0 <= k <= g-2."""
    sign = -1 if k % 2 else 1
    return Fraction(sign * factorial(g - 2) * factorial(2 * k) * factorial(g - 2 - k), factorial(k))


def _monomial_push(g: int, l: int, m: int, n: int) -> Fraction:
    if l != m or l + m + n != 2 * g - 4:
        return Fraction(0)
    return _push_value(g, n // 2)


def h_push(poly: DeltaPoly, g: int) -> Fraction:
    """Coefficient of [A_{g-2}] in h_*(poly)."""
    if g < 2:
        raise ValueError(f"h_push needs g >= 2, got {g}")
    total = Fraction(0)
    for (l, m, n), coeff in poly.items():
        if l == m and l + m + n == 2 * g - 4:
            total += coeff * _push_value(g, n // 2)
    return total


def h_push_product(left: DeltaPoly, right: DeltaPoly, g: int) -> Fraction:
    """h_push(left * right, g) without forming the product."""
    if g < 2:
        raise ValueError(f"h_push_product needs g >= 2, got {g}")
    target = 2 * g - 4
    index: Dict[Tuple[int, int], List[Tuple[int, Fraction]]] = defaultdict(list)
    for (i, j, k), coeff in right.items():
        index[(i - j, i + j + k)].append((k, coeff))
    total = Fraction(0)
    for (i, j, k), coeff in left.items():
        partners = index.get((j - i, target - (i + j + k)))
        if not partners:
            continue
        acc = Fraction(0)
        for k2, coeff2 in partners:
            acc += coeff2 * _push_value(g, (k + k2) // 2)
        total += coeff * acc
    return total


def f_push(poly: YPoly) -> DeltaPoly:
    """Fiber integral of Y -> Delta: xi f*m -> m, f*m -> 0."""
    _, xi_part = poly.split()
    return xi_part


def y_pi_push(poly: YPoly, g: int) -> Fraction:
    """pi_* = h_* f_* on Y."""
    return h_push(f_push(y_canonicalize(poly)), g)


def y_pi_push_product(left: YPoly, right: YPoly, g: int) -> Fraction:
    """y_pi_push(left * right, g) computed through the split f*A + xi f*B."""
    a1, b1 = y_canonicalize(left).split()
    a2, b2 = y_canonicalize(right).split()
    # xi^2 = xi P, so the xi-part of the product is A1 B2 + B1 A2 + P B1 B2
    return (
        h_push_product(a1, b2, g)
        + h_push_product(b1, a2, g)
        + h_push_product(b1.times_monomial(k=1), b2, g)
    )


# ── Powers of fixed divisor classes (cached) ─────────────────────────

@lru_cache(maxsize=4096)
def linear_power(t1: Scalar, t2: Scalar, p: Scalar, exponent: int) -> DeltaPoly:
    """(t1 T1 + t2 T2 + p P)^exponent."""
    if exponent < 0:
        raise ValueError("exponent must be >= 0")
    if exponent == 0:
        return DeltaPoly.constant(1)
    return linear_power(t1, t2, p, exponent - 1) * DeltaPoly.linear(t1, t2, p)


@lru_cache(maxsize=4096)
def y_linear_power(xi: Scalar, t1: Scalar, t2: Scalar, p: Scalar, exponent: int) -> YPoly:
    """Canonical form of (xi*xi + t1 f*T1 + t2 f*T2 + p f*P)^exponent."""
    if exponent < 0:
        raise ValueError("exponent must be >= 0")
    if exponent == 0:
        return YPoly({(0, 0, 0, 0): 1})
    previous = y_linear_power(xi, t1, t2, p, exponent - 1)
    return y_canonicalize(previous * YPoly.linear(xi, t1, t2, p))


# ── Theta divisor and section restrictions ───────────────────────────

def theta_on_delta() -> DeltaPoly:
    """Theta restricted to Delta: T1 + P/2."""
    return DeltaPoly.linear(1, 0, Fraction(1, 2))


def theta_on_y() -> YPoly:
    """Theta pulled back to Y: xi + f*T1 - f*P/2."""
    return YPoly.linear(1, 1, 0, Fraction(-1, 2))


def restrict_to_zero_section(poly: YPoly) -> DeltaPoly:
    """Restriction to the 0-section, whose normal bundle is P (xi -> P)."""
    out: Dict[Tuple[int, int, int], Fraction] = {}
    for (e, i, j, k), coeff in poly.items():
        key = (i, j, k + e)
        out[key] = out.get(key, 0) + coeff
    return DeltaPoly(out)


def restrict_to_infinity_section(poly: YPoly) -> DeltaPoly:
    """Restriction to the infinity-section, disjoint from xi (xi -> 0)."""
    return DeltaPoly({(i, j, k): c for (e, i, j, k), c in poly.items() if e == 0})


# ── Independent certificate for the pushforward table ────────────────

def poincare_recursion_residual(g: int, a: int, b: int, n: int) -> Fraction:
    """
    N^n coefficient of h_*(V_N^a T2^b).

    h_* is shift invariant, so this polynomial in N is constant and the
    residual must vanish for every n >= 1.
    """
    if n < 1:
        raise ValueError("the recursion residual is defined for n >= 1")
    total = Fraction(0)
    for i in range(n // 2 + 1):
        power_t1 = a - n + i
        if power_t1 < 0:
            continue
        coeff = multinomial(a, power_t1, i, n - 2 * i)
        total += coeff * _monomial_push(g, power_t1, b + i, n - 2 * i)
    return total
