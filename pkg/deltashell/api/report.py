from __future__ import annotations

import csv
from contextlib import contextmanager
import json
import logging
from typing import Any, List, Optional, Sequence

from deltashell import log
from deltashell.utils.format_utils import format_table, format_value
from .verdict import Verdict


class Report:
    """
    The outcome of one command: named results, labelled verdicts, warnings and errors,
    and optionally a table written out as CSV.

    The JSON form is ``{"command", "inputs", "results", "verdicts", "warnings"}`` with
    ``"errors"`` added when any were recorded.
    """

    def __init__(self, command: str, inputs: Optional[dict] = None):
        self.command = command
        self.inputs = {} if inputs is None else inputs
        self.results: List[dict] = []
        self.verdicts: List[Verdict] = []
        self.warnings: List[str] = []
        self.errors: List[str] = []
        self.table_header: Optional[List[str]] = None
        self.table_rows: List[list] = []

    def add(self, name: str, value: Any, note: Optional[str] = None):
        result = {"name": name, "value": value}
        if note:
            result["note"] = note
        self.results.append(result)

    def add_verdict(self, verdict: Verdict):
        self.verdicts.append(verdict)

    def warn(self, message: str):
        self.warnings.append(message)

    def error(self, message: str):
        self.errors.append(message)

    def set_table(self, header: Sequence[str], rows: Sequence[Sequence[Any]]):
        self.table_header = list(header)
        self.table_rows = [list(row) for row in rows]

    def result(self, name: str) -> Any:
        for result in self.results:
            if result["name"] == name:
                return result["value"]
        raise KeyError(name)

    @property
    def ok(self) -> bool:
        return not self.errors

    def to_dict(self) -> dict:
        data = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "verdicts": [verdict.to_dict() for verdict in self.verdicts],
            "warnings": self.warnings,
        }
        if self.errors:
            data["errors"] = self.errors
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def render(self) -> str:
        """The human readable form printed to standard output."""
        lines = [f"{self.command}"]
        for result in self.results:
            line = f"{result['name']}: {format_value(result['value'])}"
            if "note" in result:
                line += f" ({result['note']})"
            lines.append(line)
        if self.table_header is not None and self.table_rows:
            lines.append(format_table(self.table_header, self.table_rows))
        lines.extend(str(verdict) for verdict in self.verdicts)
        lines.extend(f"warning: {message}" for message in self.warnings)
        lines.extend(f"error: {message}" for message in self.errors)
        return "\n".join(lines)

    def write_csv(self, path: str):
        if self.table_header is None:
            raise ValueError(f"The {self.command} command produces no table")
        with open(path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(self.table_header)
            writer.writerows(self.table_rows)
        log.info(f"Wrote {len(self.table_rows)} rows to {path}")


class _ReportHandler(logging.Handler):
    def __init__(self, report: Report):
        super().__init__(logging.WARNING)
        self.report = report

    def emit(self, record: logging.LogRecord):
        self.report.warn(record.getMessage())


@contextmanager
def collect_warnings(report: Report):
    """Copy every warning logged while the block runs into the report."""
    handler = _ReportHandler(report)
    log.addHandler(handler)
    try:
        yield report
    finally:
        log.removeHandler(handler)
