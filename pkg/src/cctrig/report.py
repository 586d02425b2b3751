"""JSON/CSV serialization of :class:`~cctrig.harness.ResidualReport`.

Every float is written with 17 significant digits (``format(x, ".17g")``);
non-finite values become ``null`` in JSON.  Output depends only on the
report contents, so equal reports give byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
import math

from .harness import ResidualReport

__all__ = ["fmt", "report_to_dict", "to_json", "to_csv", "emit_report", "CSV_COLUMNS"]

CSV_COLUMNS = ("name", "max_abs_residual", "mean_abs_residual", "trials", "seed", "pass")


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def report_to_dict(r: ResidualReport) -> dict:
    return {
        "geometry": r.geometry,
        "curvature": r.curvature,
        "trials": r.trials,
        "first_trial": r.first_trial,
        "seed": r.seed,
        "tolerance": r.tolerance,
        "identities": [
            {
                "name": rec.name,
                "max_abs_residual": rec.max_abs_residual,
                "mean_abs_residual": rec.mean_abs_residual,
                "count": rec.count,
                "pass": rec.max_abs_residual <= r.tolerance,
                "worst_case_inputs": rec.worst_case_inputs,
            }
            for rec in r.identities
        ],
        "pass": r.passed,
    }


def _encode(obj) -> str:
    # json.dumps writes floats with repr(); the 17-digit contract needs our own walk
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_encode(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_json(r: ResidualReport) -> str:
    return _encode(report_to_dict(r)) + "\n"


def to_csv(r: ResidualReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for rec in r.identities:
        w.writerow(
            [
                rec.name,
                fmt(rec.max_abs_residual),
                fmt(rec.mean_abs_residual),
                r.trials,
                r.seed,
                "true" if rec.max_abs_residual <= r.tolerance else "false",
            ]
        )
    return buf.getvalue()


def emit_report(r: ResidualReport, format: str = "json", destination=None) -> None:
    """Write ``r`` to a path, a text stream, or stdout when ``destination`` is None."""
    if format == "json":
        text = to_json(r)
    elif format == "csv":
        text = to_csv(r)
    else:
        raise ValueError(f"unknown report format {format!r}")
    if destination is None:
        import sys

        sys.stdout.write(text)
    elif hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
