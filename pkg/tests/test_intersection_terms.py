"""
Intersection numbers a_N^{(g)}: closed forms, the three boundary terms,
assembly over the computed range and the published table at N = 2g - 1.
"""

import time
from fractions import Fraction

import pytest
from pydantic import ValidationError

from app.cli.validators import GoldenRecord
from app.ring import h_push_product, linear_power, y_linear_power, y_pi_push_product
from app.terms import (
    OutOfRangeError,
    TermBreakdown,
    assemble,
    boundary_first,
    boundary_first_direct,
    conjecture_pattern,
    corollary_I,
    formula_III,
    hodge_top,
    intersection_number,
    low_range_value,
    moduli_dimension,
    proposition_I,
    reported_closed_forms,
    table_range,
    term_I,
    term_II,
    term_II_closed,
    term_II_symmetric_sum,
    term_III,
    term_III_coefficient_sum,
    three_terms,
)


# ---------------------------------------------------------------------------
# Partial compactification
# ---------------------------------------------------------------------------

class TestHodgeValues:

    def test_hodge_top(self):
        assert hodge_top(0) == 1
        assert hodge_top(1) == Fraction(1, 24)
        assert hodge_top(2) == Fraction(1, 2880)
        assert hodge_top(3) == Fraction(1, 181440)

    def test_boundary_first(self):
        assert boundary_first(1) == Fraction(1, 2)
        assert boundary_first(2) == Fraction(-1, 24)
        assert boundary_first(4) == Fraction(-1, 7560)

    @pytest.mark.parametrize("g", range(1, 16))
    def test_boundary_first_direct(self, g):
        assert boundary_first(g) == boundary_first_direct(g)

    def test_low_range(self):
        assert low_range_value(4, 0) == hodge_top(4)
        assert low_range_value(4, 4) == boundary_first(4)
        assert low_range_value(4, 2) == 0
        assert low_range_value(4, 6) == 0
        with pytest.raises(ValueError):
            low_range_value(4, 7)

    def test_conjecture_pattern(self):
        assert conjecture_pattern(2) == [0, 2, 3]
        assert conjecture_pattern(4) == [0, 4, 7]
        assert moduli_dimension(4) == 10


# ---------------------------------------------------------------------------
# Boundary terms
# ---------------------------------------------------------------------------

class TestBoundaryTerms:

    def test_term_III(self):
        assert term_III(2, 3) == Fraction(1, 2)
        assert term_III(3, 5) == Fraction(5, 24)
        assert term_III(4, 8) == 0

    def test_term_II(self):
        assert term_II(2, 3) == Fraction(-3, 2)
        assert term_II(3, 5) == Fraction(-25, 24)
        assert term_II(7, 13) == Fraction(-4194073, 189)

    def test_term_I(self):
        assert term_I(2, 3) == Fraction(1, 12)
        assert term_I(3, 5) == Fraction(-1, 80)
        assert term_I(5, 10) == 0

    def test_term_II_closed_values(self):
        assert term_II_closed(2) == Fraction(-3, 2)
        assert term_II_closed(3) == Fraction(-25, 24)
        assert term_II_closed(4) == Fraction(-49, 80)

    @pytest.mark.parametrize("g", range(2, 21))
    def test_term_II_three_paths(self, g):
        engine = term_II(g, 2 * g - 1)
        assert engine == term_II_closed(g)
        assert engine == term_II_symmetric_sum(g)

    @pytest.mark.parametrize("g", range(2, 13))
    def test_term_III_matches_coefficient_sum(self, g):
        assert term_III(g, 2 * g - 1) == term_III_coefficient_sum(g)

    @pytest.mark.parametrize("g", range(2, 8))
    def test_delta_integrand_symmetric_in_a_b(self, g):
        n = 2 * g - 1
        for a in range(1, n - 1):
            for b in range(1, n - a):
                c = n - a - b
                ab = h_push_product(
                    linear_power(0, -2, -1, a - 1), linear_power(-2, 0, -1, b - 1).times_monomial(k=c - 1), g
                )
                ba = h_push_product(
                    linear_power(0, -2, -1, b - 1), linear_power(-2, 0, -1, a - 1).times_monomial(k=c - 1), g
                )
                assert ab == ba, (a, b, c)

    @pytest.mark.parametrize("g", range(2, 8))
    def test_y_integrand_symmetric_in_a_b(self, g):
        for a in range(1, 2 * g - 1):
            b = 2 * g - 1 - a
            ab = y_pi_push_product(y_linear_power(-2, -2, 0, 1, a - 1), y_linear_power(-2, 0, -2, 1, b - 1), g)
            ba = y_pi_push_product(y_linear_power(-2, -2, 0, 1, b - 1), y_linear_power(-2, 0, -2, 1, a - 1), g)
            assert ab == ba, (a, b)

    @pytest.mark.parametrize("g,n", [(3, 4), (3, 6), (4, 9), (1, 1)])
    def test_out_of_range(self, g, n):
        with pytest.raises(OutOfRangeError) as exc:
            term_III(g, n)
        assert exc.value.g == g
        assert exc.value.n == n


# ---------------------------------------------------------------------------
# Published table at N = 2g - 1
# ---------------------------------------------------------------------------

class TestGoldenTable:

    def test_all_rows(self, golden_records):
        start = time.time()
        for record in golden_records:
            first, second, third = three_terms(record.g, 2 * record.g - 1)
            assert first == record.expected("term_I"), record.g
            assert second == record.expected("term_II"), record.g
            assert third == record.expected("term_III"), record.g
            assert first + second + third == record.expected("total"), record.g
        assert time.time() - start < 10

    def test_rows_without_errata_match_print(self, golden_records):
        for record in golden_records:
            if record.g > 5:
                continue
            assert not record.errata
            assert intersection_number(record.g, 2 * record.g - 1) == record.total

    def test_largest_entries(self):
        assert term_III(7, 13) == Fraction(203645, 189)
        assert intersection_number(7, 13) == Fraction(-7981087, 378)
        assert intersection_number(6, 11) == Fraction(-488293, 13860)

    def test_genus_six_halves_print(self, golden_records):
        record = next(r for r in golden_records if r.g == 6)
        assert term_II(6, 11) == term_II_closed(6) == record.term_II / 2
        assert term_III(6, 11) == record.term_III / 2
        assert term_I(6, 11) == record.term_I
        assert hodge_top(4) == Fraction(1, 1814400)

    def test_genus_seven_offset(self, golden_records):
        record = next(r for r in golden_records if r.g == 7)
        assert record.term_III - term_III(7, 13) == Fraction(13, 16329600)
        assert record.total - intersection_number(7, 13) == Fraction(13, 16329600)


class TestGoldenRecord:

    ROW = dict(g=2, term_I="1/12", term_II="-3/2", term_III="1/2", total="-11/12")

    def test_printed_row_must_add_up(self):
        with pytest.raises(ValidationError):
            GoldenRecord(**{**self.ROW, "total": "-1"})

    def test_corrected_row_must_add_up(self):
        with pytest.raises(ValidationError):
            GoldenRecord(**self.ROW, errata={"term_III": "1/4"}, note="typo")

    def test_errata_need_a_note(self):
        with pytest.raises(ValidationError):
            GoldenRecord(**self.ROW, errata={"term_III": "1/4", "total": "-7/6"})

    def test_unknown_field(self):
        with pytest.raises(ValidationError):
            GoldenRecord(**self.ROW, errata={"term_IV": "0"}, note="typo")

    def test_expected_prefers_erratum(self):
        record = GoldenRecord(**self.ROW, errata={"term_III": "1/4", "total": "-7/6"}, note="typo")
        assert record.expected("term_III") == Fraction(1, 4)
        assert record.published("term_III") == Fraction(1, 2)
        assert record.expected("term_I") == Fraction(1, 12)


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------

class TestAssemble:

    def test_point_values(self):
        assert assemble(4, 4).value == Fraction(-1, 7560)
        assert assemble(4, 7).value == Fraction(-1759, 3360)
        assert assemble(5, 3).value == 0
        assert assemble(2, 0).value == Fraction(1, 2880)

    def test_low_range_record(self):
        row = assemble(3, 2)
        assert row.terms is None
        assert row.method == "closed-form"
        assert row.formal is False
        assert row.G == 6

    def test_engine_record(self):
        row = assemble(3, 5)
        assert row.method == "engine"
        assert row.terms.II == Fraction(-25, 24)
        assert row.formal is False

    def test_genus_two_top_row_is_formal(self):
        row = assemble(2, 3)
        assert row.formal is True
        assert row.value == Fraction(-11, 12)

    @pytest.mark.parametrize("g,n", [(3, 6), (4, 9), (2, 4), (3, -1), (1, 0)])
    def test_out_of_range(self, g, n):
        with pytest.raises(OutOfRangeError):
            assemble(g, n)

    def test_table_range(self):
        assert table_range(2) == [0, 1, 2, 3]
        assert table_range(5) == list(range(12))

    @pytest.mark.parametrize("g", range(2, 13))
    def test_vanishing_suite(self, g):
        pattern = set(conjecture_pattern(g))
        for n in table_range(g):
            value = assemble(g, n).value
            if n not in pattern:
                assert value == 0, (g, n)
        for n in range(2 * g, 3 * g - 3):
            # strictly inside (2g-1, 3g-3): full three-term pipeline
            first, second, third = three_terms(g, n)
            assert first == second == third == 0, (g, n)

    def test_record_rejects_inconsistent_formal_flag(self):
        with pytest.raises(ValidationError):
            TermBreakdown(genus=3, N=2, G=6, value=0, formal=True, method="closed-form")

    def test_record_rejects_wrong_total(self):
        with pytest.raises(ValidationError):
            TermBreakdown(
                genus=2, N=3, G=3, value="1/2",
                terms={"I": "1/12", "II": "-3/2", "III": "1/2"},
                formal=True, method="engine",
            )

    def test_record_serializes_rationals_as_strings(self):
        dumped = assemble(4, 7).model_dump(mode="json")
        assert dumped["value"] == "-1759/3360"
        assert dumped["terms"] == {"I": "1/672", "II": "-49/80", "III": "7/80"}

    @pytest.mark.slow
    def test_genus_fifty(self):
        start = time.time()
        row = assemble(50, 99)
        assert row.terms.II == term_II_closed(50)
        assert time.time() - start < 60


# ---------------------------------------------------------------------------
# Printed closed forms (reported only)
# ---------------------------------------------------------------------------

class TestReportedClosedForms:

    def test_record(self):
        forms = reported_closed_forms(3)
        assert forms.g == 3
        assert forms.model_dump(mode="json")["formulaIII"] == "5/2"

    def test_genus_two_values(self):
        assert corollary_I(2) == Fraction(5, 24)
        assert proposition_I(2) == Fraction(1, 6)

    def test_disagreements_are_visible(self):
        assert formula_III(3) == Fraction(5, 2)
        assert formula_III(3) != term_III(3, 5)
        assert corollary_I(2) != term_I(2, 3)
        assert proposition_I(2) != term_I(2, 3)

    def test_genus_below_two_rejected(self):
        with pytest.raises(ValueError):
            reported_closed_forms(1)
