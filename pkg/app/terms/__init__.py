"""Hodge-class closed forms, the three boundary terms and their assembly."""

from app.terms.errors import OutOfRangeError
from app.terms.hodge import (
    boundary_first,
    boundary_first_direct,
    conjecture_pattern,
    hodge_top,
    low_range_value,
    moduli_dimension,
)
from app.terms.boundary_terms import (
    check_three_term_range,
    term_I,
    term_II,
    term_II_closed,
    term_II_symmetric_sum,
    term_III,
    term_III_coefficient_sum,
)
from app.terms.schema import ReportedClosedForms, TermBreakdown, TermValues
from app.terms.assembly import assemble, intersection_number, table_range, three_terms
from app.terms.reported import corollary_I, formula_III, proposition_I, reported_closed_forms

__all__ = [
    "OutOfRangeError",
    "boundary_first",
    "boundary_first_direct",
    "conjecture_pattern",
    "hodge_top",
    "low_range_value",
    "moduli_dimension",
    "check_three_term_range",
    "term_I",
    "term_II",
    "term_II_closed",
    "term_II_symmetric_sum",
    "term_III",
    "term_III_coefficient_sum",
    "ReportedClosedForms",
    "TermBreakdown",
    "TermValues",
    "assemble",
    "intersection_number",
    "table_range",
    "three_terms",
    "corollary_I",
    "formula_III",
    "proposition_I",
    "reported_closed_forms",
]
