"""
Dual-path sweeps behind `perfcone crosscheck`.

Every gating check compares two independent evaluations exactly. The
printed closed forms for (III) and (I), and the alternating C-sum, are
only reported: their disagreement with the engine does not fail a run.
"""

import logging
import random
from fractions import Fraction
from math import factorial
from typing import Callable, List, Tuple

from app.coefficients import c_coeff, c_coeff_gamma, todd_pair_closed, todd_pair_coeff
from app.coefficients.c_coeff import alternating_c_sum, alternating_c_sum_reported
from app.coefficients.level_cover import TERM_FACTORS, BoundaryTerm, level_ratio
from app.core.exact_arith import to_pq
from app.ring import (
    DeltaPoly,
    h_push,
    poincare_recursion_residual,
    restrict_to_infinity_section,
    restrict_to_zero_section,
    shift_pullback,
    shift_pullback_iterated,
    theta_on_delta,
    theta_on_y,
    y_linear_power,
    y_pi_push,
    y_pi_push_product,
)
from app.terms import (
    assemble,
    boundary_first,
    boundary_first_direct,
    conjecture_pattern,
    reported_closed_forms,
    table_range,
    term_I,
    term_II,
    term_II_closed,
    term_II_symmetric_sum,
    term_III,
    term_III_coefficient_sum,
)
from app.utils.check_metrics import CheckMetrics

logger = logging.getLogger(__name__)

LEVELS = (3, 5, 7)
# (Outcome, number of equalities, first mismatch)
CheckResult = Tuple[bool, int, str]


def _show(value) -> str:
    return to_pq(value) if isinstance(value, (int, Fraction)) else repr(value)


def _first_failure(pairs) -> CheckResult:
    count = 0
    for label, left, right in pairs:
        count += 1
        if left != right:
            return False, count, f"{label}: {_show(left)} != {_show(right)}"
    return True, count, ""


# ── coefficients ─────────────────────────────────────────────────────

def check_c_coeff(g_max: int, seed: int) -> CheckResult:
    return _first_failure(
        (f"g={g} a={a} b={b}", c_coeff(g, a, b), c_coeff_gamma(g, a, b))
        for g in range(2, g_max + 1)
        for a in range(1, 2 * g - 1)
        for b in range(1, 2 * g - a)
    )


def check_todd_pair(g_max: int, seed: int) -> CheckResult:
    limit = max(2 * g_max, 12)
    return _first_failure(
        (f"n={n} m={s - n}", todd_pair_coeff(n, s - n), todd_pair_closed(n, s - n))
        for s in range(limit + 1)
        for n in range(s + 1)
    )


def check_level_ratio(g_max: int, seed: int) -> CheckResult:
    return _first_failure(
        (f"{term.value} g={g} ell={ell}", level_ratio(term, g, ell), TERM_FACTORS[term])
        for term in BoundaryTerm
        for g in range(2, g_max + 1)
        for ell in LEVELS
    )


# ── engine ───────────────────────────────────────────────────────────

def check_push_TT(g_max: int, seed: int) -> CheckResult:
    return _first_failure(
        (f"g={g}", h_push(DeltaPoly({(g - 2, g - 2, 0): 1}), g), Fraction(factorial(g - 2) ** 2))
        for g in range(2, g_max + 1)
    )


def _xi_integrand_push(g: int, a: int, b: int) -> Fraction:
    left = y_linear_power(-2, -2, 0, 1, a - 1)
    right = y_linear_power(-2, 0, -2, 1, b - 1)
    return y_pi_push_product(left, right, g)


def check_push_xi_TP(g_max: int, seed: int) -> CheckResult:
    def pairs():
        for g in range(2, g_max + 1):
            for a in range(1, 2 * g - 1):
                b = 2 * g - 1 - a
                yield f"g={g} a={a} b={b}", _xi_integrand_push(g, a, b), 2 * c_coeff(g, a, b)
                # off the critical degree the pushforward vanishes
                yield f"g={g} a={a} b={b - 1}", _xi_integrand_push(g, a, b - 1) if b > 1 else 0, 0
                yield f"g={g} a={a} b={b + 1}", _xi_integrand_push(g, a, b + 1), 0
    return _first_failure(pairs())


def check_push_product(g_max: int, seed: int) -> CheckResult:
    """The split shortcut against pushing the expanded product."""
    def pairs():
        for g in range(2, min(g_max, 5) + 1):
            for a in range(1, 2 * g - 1):
                left = y_linear_power(-2, -2, 0, 1, a - 1)
                right = y_linear_power(-2, 0, -2, 1, 2 * g - 2 - a)
                yield f"g={g} a={a}", y_pi_push_product(left, right, g), y_pi_push(left * right, g)
    return _first_failure(pairs())


def _random_delta_poly(rng: random.Random, degree: int) -> DeltaPoly:
    terms = {}
    for _ in range(rng.randint(1, 6)):
        i = rng.randint(0, degree)
        j = rng.randint(0, degree - i)
        terms[(i, j, degree - i - j)] = rng.randint(-9, 9)
    return DeltaPoly(terms)


def check_shift_invariance(g_max: int, seed: int) -> CheckResult:
    rng = random.Random(seed)

    def pairs():
        for trial in range(100):
            g = rng.randint(2, min(g_max, 6))
            poly = _random_delta_poly(rng, 2 * g - 4)
            for n in range(1, 6):
                yield f"trial={trial} g={g} n={n}", h_push(shift_pullback(poly, n), g), h_push(poly, g)
    return _first_failure(pairs())


def check_shift_iterated(g_max: int, seed: int) -> CheckResult:
    rng = random.Random(seed + 1)
    count = 0
    for trial in range(20):
        poly = _random_delta_poly(rng, rng.randint(0, 4))
        for n in range(1, 6):
            count += 1
            if shift_pullback_iterated(poly, n) != shift_pullback(poly, n):
                return False, count, f"trial={trial} n={n}: iterated shift differs"
    return True, count, ""


def check_poincare(g_max: int, seed: int) -> CheckResult:
    def pairs():
        for g in range(2, g_max + 1):
            for a in range(0, 2 * g - 3):
                b = (2 * g - 4 - a) // 2
                for n in range(1, a + 1):
                    yield f"g={g} A={a} B={b} n={n}", poincare_recursion_residual(g, a, b, n), 0
    return _first_failure(pairs())


def check_theta_sections(g_max: int, seed: int) -> CheckResult:
    theta = theta_on_y()
    return _first_failure([
        ("zero section", restrict_to_zero_section(theta), theta_on_delta()),
        ("infinity section", shift_pullback(restrict_to_infinity_section(theta), 1), theta_on_delta()),
    ])


# ── intersection terms ───────────────────────────────────────────────

def check_term_II(g_max: int, seed: int) -> CheckResult:
    def pairs():
        for g in range(2, g_max + 1):
            engine = term_II(g, 2 * g - 1)
            yield f"g={g} closed", engine, term_II_closed(g)
            yield f"g={g} symmetric", engine, term_II_symmetric_sum(g)
    return _first_failure(pairs())


def check_term_III(g_max: int, seed: int) -> CheckResult:
    return _first_failure(
        (f"g={g}", term_III(g, 2 * g - 1), term_III_coefficient_sum(g))
        for g in range(2, g_max + 1)
    )


def check_boundary_first(g_max: int, seed: int) -> CheckResult:
    return _first_failure(
        (f"g={g}", boundary_first(g), boundary_first_direct(g)) for g in range(1, g_max + 1)
    )


def check_vanishing(g_max: int, seed: int) -> CheckResult:
    """Zero off the pattern; every N in the table runs the full pipeline."""
    count = 0
    for g in range(2, g_max + 1):
        allowed = set(conjecture_pattern(g))
        for n in table_range(g):
            count += 1
            value = assemble(g, n).value
            if value and n not in allowed:
                return False, count, f"g={g} N={n}: {to_pq(value)} off the pattern"
            if not value and n in (0, g):
                return False, count, f"g={g} N={n}: unexpected zero"
        logger.info(f"vanishing sweep g={g} done")
    return True, count, ""


GATING_CHECKS: List[Tuple[str, Callable[[int, int], CheckResult]]] = [
    ("c_coeff vs Gamma form", check_c_coeff),
    ("todd_pair sum vs closed form", check_todd_pair),
    ("level_ratio constant in ell", check_level_ratio),
    ("h_push T1^(g-2) T2^(g-2)", check_push_TT),
    ("y_pi_push vs 2 C_g^(a,b)", check_push_xi_TP),
    ("y_pi_push split vs expanded", check_push_product),
    ("h_push shift invariance", check_shift_invariance),
    ("shift closed vs iterated", check_shift_iterated),
    ("recursion residual vanishes", check_poincare),
    ("theta section restrictions", check_theta_sections),
    ("term_II engine vs closed vs symmetric", check_term_II),
    ("term_III engine vs C_g^(a,b) sum", check_term_III),
    ("boundary_first vs direct", check_boundary_first),
    ("vanishing pattern sweep", check_vanishing),
]


def _reported_lines(g_max: int, metrics: CheckMetrics) -> List[str]:
    lines = ["REPORTED"]
    for g in range(2, g_max + 1):
        forms = reported_closed_forms(g)
        n = 2 * g - 1
        engine_III = term_III(g, n)
        engine_I = term_I(g, n)
        for name, printed, engine in (
            ("formulaIII", forms.formulaIII, engine_III),
            ("corollaryI", forms.corollaryI, engine_I),
            ("propositionI", forms.propositionI, engine_I),
        ):
            agree = printed == engine
            metrics.add_check(f"{name} g={g}", agree, gating=False)
            status = "agrees" if agree else f"differs by {to_pq(printed - engine)}"
            lines.append(f"  g={g} {name}={to_pq(printed)} engine={to_pq(engine)} {status}")
    for g in range(2, g_max + 1):
        for m in range(1, g):
            value = alternating_c_sum(g, m)
            printed = alternating_c_sum_reported(g, m)
            agree = value == printed
            metrics.add_check(f"alternating_c_sum g={g} m={m}", agree, gating=False)
            if not agree:
                lines.append(
                    f"  g={g} m={m} alternating_c_sum={to_pq(value)} printed={to_pq(printed)}"
                )
    return lines


def run_crosscheck(g_max: int, seed: int, metrics: CheckMetrics) -> List[str]:
    """Run every gating check, then the reported comparisons; returns output lines."""
    lines: List[str] = []
    for name, check in GATING_CHECKS:
        passed, count, detail = check(g_max, seed)
        metrics.add_check(name, passed, gating=True, detail=detail or None, count=count)
        if passed:
            lines.append(f"PASS  {name} ({count})")
        else:
            logger.error(f"crosscheck failed: {name}: {detail}")
            lines.append(f"FAIL  {name}: {detail}")

    lines.extend(_reported_lines(g_max, metrics))
    lines.append(metrics.summary_line())
    return lines
