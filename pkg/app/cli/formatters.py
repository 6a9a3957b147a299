"""
Output formatters for the perfcone CLI.
Renders TermBreakdown rows as JSON, CSV or Markdown; rationals always
leave as "p/q" strings.
"""

import csv
import io
import json
from datetime import datetime, timezone
from typing import Dict, List, Optional, Sequence

from app import __version__
from app.cli.validators import GOLDEN_FIELDS, GoldenRecord
from app.core.exact_arith import to_pq
from app.terms.schema import TermBreakdown

CSV_COLUMNS = ["genus", "N", "G", "value", "term_I", "term_II", "term_III", "formal"]


def build_meta() -> Dict[str, str]:
    """Metadata block; only emitted with --meta."""
    return {
        "tool": "perfcone",
        "version": __version__,
        "generated_at": datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
    }


def _comment_lines(meta: Optional[Dict[str, str]]) -> str:
    if not meta:
        return ""
    return "".join(f"# {key}: {value}\n" for key, value in meta.items())


def _csv_row(row: TermBreakdown) -> List[str]:
    terms = row.terms
    return [
        str(row.genus),
        str(row.N),
        str(row.G),
        to_pq(row.value),
        to_pq(terms.I) if terms else "",
        to_pq(terms.II) if terms else "",
        to_pq(terms.III) if terms else "",
        "true" if row.formal else "false",
    ]


def format_json(rows: Sequence[TermBreakdown], single: bool = False,
                meta: Optional[Dict[str, str]] = None) -> str:
    data = [row.model_dump(mode="json") for row in rows]
    payload = data[0] if single else data
    if meta:
        payload = {"meta": meta, "data": payload}
    return json.dumps(payload, indent=2) + "\n"


def format_csv(rows: Sequence[TermBreakdown], meta: Optional[Dict[str, str]] = None) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(_csv_row(row))
    return _comment_lines(meta) + buffer.getvalue()


def format_md(rows: Sequence[TermBreakdown], meta: Optional[Dict[str, str]] = None) -> str:
    report = _comment_lines(meta)
    if meta:
        report += "\n"
    report += "| g | N | G | a_N | (I) | (II) | (III) | formal |\n"
    report += "|---|---|---|---|---|---|---|---|\n"
    for row in rows:
        cells = _csv_row(row)
        cells[4:7] = [c or "-" for c in cells[4:7]]
        report += "| " + " | ".join(cells) + " |\n"
    return report


def render(rows: Sequence[TermBreakdown], fmt: str, single: bool = False,
           meta: Optional[Dict[str, str]] = None) -> str:
    """Serialize rows in the requested format."""
    if fmt == "json":
        return format_json(rows, single=single, meta=meta)
    if fmt == "csv":
        return format_csv(rows, meta=meta)
    if fmt == "md":
        return format_md(rows, meta=meta)
    raise ValueError(f"unknown format '{fmt}'")


# ── verify ───────────────────────────────────────────────────────────

def format_verify_json(outcomes: List[Dict]) -> str:
    """Per-row booleans of a golden verification run."""
    return json.dumps(
        {
            "rows": outcomes,
            "matched": sum(1 for o in outcomes if o["match"]),
            "total": len(outcomes),
            "errata": sum(len(o["errata"]) for o in outcomes),
        },
        indent=2,
    ) + "\n"


def format_verify_diff(record: GoldenRecord, computed: Dict[str, str]) -> str:
    lines = []
    for field in GOLDEN_FIELDS:
        expected = to_pq(record.expected(field))
        if computed[field] != expected:
            lines.append(f"  g={record.g} {field}: expected {expected}, got {computed[field]}")
    return "\n".join(lines)


def format_verify_errata(record: GoldenRecord) -> str:
    """One line per field checked against a recorded erratum."""
    return "\n".join(
        f"  g={record.g} {field}: erratum, published {to_pq(record.published(field))},"
        f" checked against {to_pq(value)} ({record.note})"
        for field, value in record.errata.items()
    )
