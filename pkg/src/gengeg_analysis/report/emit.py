"""CSV / JSON output of reports, value tables and quadrature rules.

Both formats are UTF-8 with LF line endings; floats are written in their
shortest round-trip decimal form so that parsing reproduces them exactly.
"""
import io
import json
import logging
import sys
from enum import Enum
from pathlib import Path

import numpy as np
import pandas as pd
from pydantic import BaseModel

from gengeg_analysis.asymptotics.state import AsymptoticReport, Verdict
from gengeg_analysis.exception.exception import ComputationError, DomainError

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json")


def convert_to_serializable(obj):
    if isinstance(obj, BaseModel):
        return convert_to_serializable(obj.model_dump(by_alias=True))
    elif isinstance(obj, Enum):
        return obj.value
    elif isinstance(obj, np.generic):
        return obj.item()
    elif isinstance(obj, np.ndarray):
        return obj.tolist()
    elif isinstance(obj, pd.DataFrame):
        return [convert_to_serializable(row) for row in obj.to_dict(orient="records")]
    elif isinstance(obj, float):
        # -0.0 would otherwise print as "-0.0"
        return obj + 0.0
    elif isinstance(obj, dict):
        return {k: convert_to_serializable(v) for k, v in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [convert_to_serializable(elem) for elem in obj]
    else:
        return obj


def report_to_dict(report: AsymptoticReport) -> dict:
    """Report fields in output order; nested subreports follow the same layout."""
    return {
        "params": convert_to_serializable(report.params),
        "target_exponent": report.target_exponent,
        "fitted_exponent": report.fitted_exponent,
        "ratio_min": report.ratio_min,
        "ratio_max": report.ratio_max,
        "tolerance_used": report.tolerance_used,
        "verdict": report.verdict.value,
        "records": [convert_to_serializable(r) for r in report.records],
        "label": report.label,
        "slope_tol": report.slope_tol,
        "fit_min_n": report.fit_min_n,
        "checks": dict(report.checks),
        "note": report.note,
        "subreports": [report_to_dict(s) for s in report.subreports],
    }


def _check_format(fmt: str) -> str:
    if fmt not in FORMATS:
        raise DomainError(f"unknown output format {fmt!r}; expected one of {', '.join(FORMATS)}")
    return fmt


def _render(frame: pd.DataFrame, payload, fmt: str) -> str:
    if fmt == "csv":
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()
    return json.dumps(convert_to_serializable(payload), indent=2, allow_nan=False) + "\n"


def _write(text: str, destination) -> None:
    try:
        if isinstance(destination, (str, Path)):
            with open(destination, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(text)
            logger.info("wrote %d characters to %s", len(text), destination)
        else:
            destination.write(text)
            destination.flush()
    except Exception as e:
        raise ComputationError(e, sys)


def emit_report(report: AsymptoticReport, fmt: str = "csv", destination=None) -> None:
    """Write the report to destination (a path or a text stream, stdout by default)."""
    fmt = _check_format(fmt)
    if not report.records:
        if report.verdict is Verdict.NOT_APPLICABLE:
            raise DomainError(f"report {report.label!r} is not applicable and has no records to emit")
        raise DomainError(f"report {report.label!r} has no records; refusing to emit it")
    _write(_render(report.to_frame(), report_to_dict(report), fmt), destination or sys.stdout)


def emit_frame(frame: pd.DataFrame, fmt: str = "csv", destination=None) -> None:
    """Write a table (value table, quadrature rule) as CSV or as a JSON list of rows."""
    fmt = _check_format(fmt)
    _write(_render(frame, frame, fmt), destination or sys.stdout)


def summarize(report: AsymptoticReport) -> str:
    """Human-readable verdict summary, one line per report, nested reports indented."""
    lines = []

    def walk(r, depth):
        fitted = "n/a" if r.fitted_exponent is None else f"{r.fitted_exponent:.6g}"
        band = "n/a" if r.ratio_min is None else f"[{r.ratio_min:.6g}, {r.ratio_max:.6g}]"
        lines.append(
            f"{'  ' * depth}{r.label}: {r.verdict.value} "
            f"(target {r.target_exponent:.6g}, fitted {fitted}, ratio band {band})"
        )
        for name, ok in r.checks.items():
            lines.append(f"{'  ' * (depth + 1)}{name}: {'ok' if ok else 'violated'}")
        for s in r.subreports:
            walk(s, depth + 1)

    walk(report, 0)
    return "\n".join(lines)
