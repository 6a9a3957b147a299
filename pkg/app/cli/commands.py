"""
Command handlers for the perfcone CLI.

Subcommands: compute, table, verify, crosscheck. Data goes to stdout,
diagnostics to stderr.

Exit codes: 0 success, 1 verification failure, 2 out of range, 64 usage.
"""

import argparse
import logging
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from app import __version__
from app.cli.crosscheck import run_crosscheck
from app.cli.formatters import (
    build_meta,
    format_verify_diff,
    format_verify_errata,
    format_verify_json,
    render,
)
from app.cli.golden import GOLDEN_RECORDS
from app.cli.validators import GOLDEN_FIELDS, ComputeRequest, CrosscheckRequest, TableRequest
from app.core.config import settings
from app.core.exact_arith import to_pq
from app.terms import OutOfRangeError, assemble, table_range, three_terms
from app.terms.schema import TermBreakdown
from app.utils.check_metrics import CheckMetrics

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_OUT_OF_RANGE = 2
EXIT_USAGE = 64


class UsageError(Exception):
    """Malformed command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="perfcone",
        description="Exact intersection numbers a_N^(g) on the perfect cone compactification of A_g.",
    )
    parser.add_argument("--version", action="version", version=f"perfcone {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    compute = sub.add_parser("compute", help="one value with its breakdown")
    compute.add_argument("--genus", type=int, required=True)
    compute.add_argument("--n", type=int, required=True)
    compute.add_argument("--format", default="json")
    compute.add_argument("--meta", action="store_true")

    table = sub.add_parser("table", help="every computed N for a range of genera")
    table.add_argument("--g-min", type=int, required=True)
    table.add_argument("--g-max", type=int, required=True)
    table.add_argument("--format", default="json")
    table.add_argument("--meta", action="store_true")

    verify = sub.add_parser("verify", help="recompute the published rows")
    verify.add_argument("--json", action="store_true")

    crosscheck = sub.add_parser("crosscheck", help="dual-path sweeps up to --g-max")
    crosscheck.add_argument("--g-max", type=int, default=10)
    crosscheck.add_argument("--seed", type=int, default=None)

    return parser


def _write(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def _diagnostic(message: str) -> None:
    sys.stderr.write(f"perfcone: {message}\n")


# ── compute ──────────────────────────────────────────────────────────

def run_compute(request: ComputeRequest) -> int:
    row = assemble(request.genus, request.n)
    meta = build_meta() if request.meta else None
    _write(render([row], request.format, single=True, meta=meta))
    return EXIT_OK


# ── table ────────────────────────────────────────────────────────────

def _timed_assemble(cell: Tuple[int, int]) -> TermBreakdown:
    g, n = cell
    start = time.time()
    row = assemble(g, n)
    logger.debug(f"g={g} N={n} in {time.time() - start:.3f}s")
    return row


def compute_rows(g_min: int, g_max: int, workers: int = 1) -> List[TermBreakdown]:
    """All table rows, ordered by (g, N) whatever the pool size."""
    cells = [(g, n) for g in range(g_min, g_max + 1) for n in table_range(g)]
    if workers <= 1:
        return [_timed_assemble(cell) for cell in cells]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_timed_assemble, cells))


def run_table(request: TableRequest) -> int:
    logger.info(f"table g={request.g_min}..{request.g_max} workers={settings.WORKERS}")
    rows = compute_rows(request.g_min, request.g_max, settings.WORKERS)
    meta = build_meta() if request.meta else None
    _write(render(rows, request.format, meta=meta))
    return EXIT_OK


# ── verify ───────────────────────────────────────────────────────────

def run_verify(as_json: bool = False) -> int:
    outcomes: List[Dict] = []
    lines: List[str] = []
    for record in GOLDEN_RECORDS:
        n = 2 * record.g - 1
        first, second, third = three_terms(record.g, n)
        computed = {
            "term_I": to_pq(first),
            "term_II": to_pq(second),
            "term_III": to_pq(third),
            "total": to_pq(first + second + third),
        }
        flags = {
            field: computed[field] == to_pq(record.expected(field))
            for field in GOLDEN_FIELDS
        }
        match = all(flags.values())
        outcomes.append({"g": record.g, "N": n, **flags, "match": match, "errata": sorted(record.errata)})
        if not match:
            lines.append(format_verify_diff(record, computed))
            logger.error(f"golden row g={record.g} mismatch")
        if record.errata:
            lines.append(format_verify_errata(record))
            logger.warning(f"golden row g={record.g} checked against {len(record.errata)} errata")

    matched = sum(1 for o in outcomes if o["match"])
    errata = sum(len(o["errata"]) for o in outcomes)
    if as_json:
        _write(format_verify_json(outcomes))
    else:
        for line in lines:
            _write(line + "\n")
        _write(f"{matched}/{len(outcomes)} rows match ({errata} fields against recorded errata)\n")
    return EXIT_OK if matched == len(outcomes) else EXIT_FAILED


# ── crosscheck ───────────────────────────────────────────────────────

def run_crosscheck_command(request: CrosscheckRequest) -> int:
    seed = settings.CROSSCHECK_SEED if request.seed is None else request.seed
    metrics = CheckMetrics()
    start = time.time()
    lines = run_crosscheck(request.g_max, seed, metrics)
    logger.info(f"crosscheck g<={request.g_max} in {time.time() - start:.2f}s")
    _write("\n".join(lines) + "\n")
    return EXIT_OK if metrics.all_gating_passed else EXIT_FAILED


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "compute":
        return run_compute(ComputeRequest(genus=args.genus, n=args.n, format=args.format, meta=args.meta))
    if args.command == "table":
        return run_table(TableRequest(g_min=args.g_min, g_max=args.g_max, format=args.format, meta=args.meta))
    if args.command == "verify":
        return run_verify(as_json=args.json)
    return run_crosscheck_command(CrosscheckRequest(g_max=args.g_max, seed=args.seed))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run the subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args)
    except UsageError as e:
        _diagnostic(str(e))
        return EXIT_USAGE
    except ValidationError as e:
        for error in e.errors():
            loc = ".".join(str(part) for part in error["loc"]) or "arguments"
            _diagnostic(f"invalid {loc}: {error['msg']}")
        return EXIT_USAGE
    except OutOfRangeError as e:
        _diagnostic(str(e))
        return EXIT_OUT_OF_RANGE
    except SystemExit as e:
        # --help and --version
        return e.code if isinstance(e.code, int) else EXIT_OK
