"""Machine-readable report emission (JSON and TSV).

Every command produces one Report: an echo of the command line, an
overall status, and a list of flat result records.  Emission is
deterministic byte for byte: JSON uses sorted keys and fixed
indentation, TSV uses the column order declared by the verb, and both
carry the mandatory schema_version.

TSV layout: three leading comment lines ("# schema_version", "# command"
and "# status", each with a tab-separated value), then a header row
naming the columns, then one row per result record.  Empty cells stand
for missing/null values; booleans are "true"/"false".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = "1"

STATUS_OK = "ok"
STATUS_FAIL = "fail"
STATUS_INDETERMINATE = "indeterminate"

_EXIT_CODES = {STATUS_OK: 0, STATUS_FAIL: 1, STATUS_INDETERMINATE: 3}

FORMATS = ("json", "tsv")


@dataclass(frozen=True)
class Report:
    """One command's outcome: echo, overall status, and result rows."""

    command: str
    status: str
    results: tuple[dict, ...]
    columns: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.status not in _EXIT_CODES:
            raise ValueError(f"unknown status {self.status!r}")
        if not self.columns and self.results:
            cols: list[str] = []
            for row in self.results:
                for key in row:
                    if key not in cols:
                        cols.append(key)
            object.__setattr__(self, "columns", tuple(cols))


def combine_status(statuses) -> str:
    """Aggregate row statuses: any fail wins, else any indeterminate."""
    seen = set(statuses)
    bad = seen - set(_EXIT_CODES)
    if bad:
        raise ValueError(f"unknown statuses {sorted(bad)!r}")
    if STATUS_FAIL in seen:
        return STATUS_FAIL
    if STATUS_INDETERMINATE in seen:
        return STATUS_INDETERMINATE
    return STATUS_OK


def exit_code(status: str) -> int:
    """0 for ok, 1 for any failure, 3 for indeterminate-only outcomes."""
    return _EXIT_CODES[status]


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    text = str(value)
    if "\t" in text or "\n" in text:
        raise ValueError(f"value not representable in TSV: {value!r}")
    return text


def emit_report(report: Report, fmt: str) -> str:
    """Render a report as JSON or TSV text (newline-terminated)."""
    if fmt == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": report.command,
            "status": report.status,
            "results": list(report.results),
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt == "tsv":
        lines = [
            f"# schema_version\t{SCHEMA_VERSION}",
            f"# command\t{_cell(report.command)}",
            f"# status\t{report.status}",
            "\t".join(report.columns),
        ]
        for row in report.results:
            lines.append("\t".join(_cell(row.get(c)) for c in report.columns))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
