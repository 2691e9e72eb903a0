"""CSV / JSON serialization of sweep records.

Floats are written in scientific notation with 10 significant digits.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Iterable, TextIO

from .analysis import L2Record

__all__ = ["CSV_HEADER", "format_number", "record_row", "write_records", "read_csv", "dumps_records"]

# Column name -> L2Record attribute.
COLUMNS = {
    "n": "n",
    "f": "f",
    "ns": "n_s",
    "k": "k",
    "l2_measured": "l2_measured",
    "l2_theoretical": "l2_theoretical",
    "eps_p_ns": "eps_p_NS",
    "eps_p_s": "eps_p_S",
    "prob_s_ideal": "prob_S_ideal",
    "prob_s_fixed": "prob_S_fixed",
}
CSV_HEADER = tuple(COLUMNS)
INT_COLUMNS = {"n", "f", "ns", "k"}


def format_number(x) -> str:
    if isinstance(x, bool):
        return "pass" if x else "fail"
    if isinstance(x, int):
        return str(x)
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return "nan"
    return format(float(x), ".9e")


def record_row(rec: L2Record) -> dict:
    return {col: format_number(getattr(rec, attr)) for col, attr in COLUMNS.items()}


def _json_value(col: str, rec: L2Record):
    v = getattr(rec, COLUMNS[col])
    if col in INT_COLUMNS:
        return v
    return None if math.isnan(v) else float(format_number(v))


def dumps_records(records: Iterable[L2Record]) -> str:
    rows = [{col: _json_value(col, r) for col in CSV_HEADER} for r in records]
    return json.dumps(rows, indent=2)


def write_records(records: Iterable[L2Record], stream: TextIO, fmt: str = "csv") -> None:
    if fmt == "json":
        stream.write(dumps_records(records) + "\n")
        return
    writer = csv.DictWriter(stream, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(record_row(rec))


def read_csv(stream: TextIO | str) -> list[L2Record]:
    """Parse CSV written by :func:`write_records` (a stream or the text itself)."""
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    out = []
    for row in csv.DictReader(stream):
        kwargs = {}
        for col, attr in COLUMNS.items():
            kwargs[attr] = int(row[col]) if col in INT_COLUMNS else float(row[col])
        out.append(L2Record(**kwargs))
    return out
