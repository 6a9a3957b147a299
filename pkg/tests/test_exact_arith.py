"""
Exact arithmetic: factorials, Bernoulli numbers, zeta values, group orders.

All checks are exact Fraction equalities; no floats anywhere.
"""

from fractions import Fraction
from math import comb, gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.core.exact_arith import (
    Rational,
    bernoulli_modern,
    bernoulli_paper,
    binomial,
    boundary_component_count,
    double_factorial_odd,
    factorial,
    from_pq,
    multinomial,
    pochhammer,
    sp_group_order,
    to_pq,
    todd_coefficient,
    zeta_negative_odd,
)


# ---------------------------------------------------------------------------
# Factorials and binomials
# ---------------------------------------------------------------------------

class TestFactorials:

    def test_small_values(self):
        assert [factorial(n) for n in range(6)] == [1, 1, 2, 6, 24, 120]
        assert isinstance(factorial(5), Rational)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            factorial(-1)

    def test_double_factorial(self):
        assert double_factorial_odd(0) == 1
        assert double_factorial_odd(3) == 15
        assert double_factorial_odd(5) == 945

    def test_binomial_outside_range_is_zero(self):
        assert binomial(5, -1) == 0
        assert binomial(5, 6) == 0
        assert binomial(6, 3) == 20

    def test_multinomial(self):
        assert multinomial(5, 1, 2, 2) == 30
        with pytest.raises(ValueError):
            multinomial(5, 1, 1, 1)

    def test_pochhammer(self):
        assert pochhammer(Fraction(1, 2), 0) == 1
        assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
        assert pochhammer(-2, 3) == 0

    @given(n=st.integers(min_value=0, max_value=60), k=st.integers(min_value=0, max_value=60))
    def test_binomial_matches_math_comb(self, n, k):
        assert binomial(n, k) == comb(n, k)

    def test_factorial_recursion(self):
        for n in range(1, 201):
            assert factorial(n) == n * factorial(n - 1)

    @given(
        z=st.fractions(min_value=-20, max_value=20, max_denominator=50),
        j=st.integers(min_value=0, max_value=12),
        k=st.integers(min_value=0, max_value=12),
    )
    def test_pochhammer_splits(self, z, j, k):
        assert pochhammer(z, j + k) == pochhammer(z, j) * pochhammer(z + j, k)

    @given(st.integers(min_value=0, max_value=40), st.integers(min_value=0, max_value=40),
           st.integers(min_value=0, max_value=40))
    def test_multinomial_is_product_of_binomials(self, a, b, c):
        n = a + b + c
        assert multinomial(n, a, b, c) == comb(n, a) * comb(n - a, b)


# ---------------------------------------------------------------------------
# Bernoulli numbers and zeta values
# ---------------------------------------------------------------------------

class TestBernoulli:

    def test_modern_convention(self):
        assert bernoulli_modern(0) == 1
        assert bernoulli_modern(1) == Fraction(-1, 2)
        assert bernoulli_modern(2) == Fraction(1, 6)
        assert bernoulli_modern(4) == Fraction(-1, 30)
        assert bernoulli_modern(12) == Fraction(-691, 2730)

    @given(st.integers(min_value=1, max_value=40))
    def test_odd_indices_vanish(self, k):
        assert bernoulli_modern(2 * k + 1) == 0

    def test_unsigned_variant(self):
        assert [bernoulli_paper(k) for k in range(1, 5)] == [
            Fraction(1, 6), Fraction(1, 30), Fraction(1, 42), Fraction(1, 30)
        ]
        with pytest.raises(ValueError):
            bernoulli_paper(0)

    @given(st.integers(min_value=1, max_value=40))
    def test_unsigned_variant_is_positive(self, k):
        assert bernoulli_paper(k) > 0

    def test_todd_coefficients(self):
        assert todd_coefficient(0) == 1
        assert todd_coefficient(1) == Fraction(1, 2)
        assert todd_coefficient(2) == Fraction(1, 12)
        assert todd_coefficient(3) == 0
        assert todd_coefficient(4) == Fraction(-1, 720)

    def test_zeta_negative_odd(self):
        assert zeta_negative_odd(1) == Fraction(-1, 12)
        assert zeta_negative_odd(2) == Fraction(1, 120)
        assert zeta_negative_odd(3) == Fraction(-1, 252)
        with pytest.raises(ValueError):
            zeta_negative_odd(0)

    @pytest.mark.parametrize("k", range(1, 31))
    def test_zeta_against_bernoulli(self, k):
        assert zeta_negative_odd(k) * 2 * k == -bernoulli_modern(2 * k)

    @pytest.mark.parametrize("m", range(0, 21))
    def test_todd_generating_function(self, m):
        # x/(1 - e^{-x}) times (1 - e^{-x})/x is 1
        total = sum(
            (todd_coefficient(n) * Fraction((-1) ** (m - n), factorial(m - n + 1)) for n in range(m + 1)),
            Fraction(0),
        )
        assert total == (1 if m == 0 else 0)

    def test_concurrent_fill_is_consistent(self):
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=8) as pool:
            values = list(pool.map(bernoulli_modern, range(80, 0, -1)))
        assert values == [bernoulli_modern(n) for n in range(80, 0, -1)]


# ---------------------------------------------------------------------------
# Level cover group orders
# ---------------------------------------------------------------------------

class TestGroupOrders:

    def test_sp_group_order(self):
        assert sp_group_order(0, 3) == 1
        # |SL(2, Z/3)| = 24
        assert sp_group_order(1, 3) == 24
        assert sp_group_order(2, 3) == 51840

    def test_boundary_component_count(self):
        assert boundary_component_count(1, 3) == 4
        assert boundary_component_count(2, 5) == 312


# ---------------------------------------------------------------------------
# Wire format
# ---------------------------------------------------------------------------

class TestWireFormat:

    def test_integers_have_no_denominator(self):
        assert to_pq(Fraction(4, 2)) == "2"
        assert to_pq(0) == "0"

    def test_sign_on_numerator(self):
        assert to_pq(Fraction(1, -12)) == "-1/12"

    def test_parse(self):
        assert from_pq("-1759/3360") == Fraction(-1759, 3360)
        assert from_pq(" 7 ") == 7

    @given(
        st.integers(min_value=-10 ** 6, max_value=10 ** 6),
        st.integers(min_value=1, max_value=10 ** 6),
        st.integers(min_value=1, max_value=1000),
    )
    def test_canonical_form(self, p, q, scale):
        text = to_pq(Fraction(p * scale, -q * scale))
        value = from_pq(text)
        assert value == Fraction(-p, q)
        if "/" in text:
            numer, denom = (int(part) for part in text.split("/"))
            assert denom > 1
            assert gcd(numer, denom) == 1


# ---------------------------------------------------------------------------
# Rational field laws
# ---------------------------------------------------------------------------

rationals = st.fractions(max_denominator=10 ** 6)


class TestRationalLaws:

    @given(rationals, rationals, rationals)
    def test_associative(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)

    @given(rationals, rationals, rationals)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(rationals, rationals)
    def test_results_stay_reduced(self, a, b):
        for value in (a + b, a - b, a * b):
            assert value.denominator > 0
            assert gcd(value.numerator, value.denominator) == 1
