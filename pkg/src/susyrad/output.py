"""Delimited output: one record type, CSV and JSON emitters.

JSON floats use Python's shortest round-trip representation (at most 17
significant digits, exact on re-parse); CSV floats carry 12 significant
digits.  Every emitted number must be finite; NaN or infinity anywhere in a
record is a bug upstream and raises here.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Diagnostic:
    name: str
    value: float
    tolerance: float


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    columns: list
    rows: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)

    def _check_finite(self):
        def walk(value, where):
            if isinstance(value, float) and not math.isfinite(value):
                raise ValueError(f"non-finite number in {where}: {value!r}")
            if isinstance(value, dict):
                for key, item in value.items():
                    walk(item, f"{where}.{key}")

        walk(self.inputs, "inputs")
        for idx, row in enumerate(self.rows):
            walk(row, f"row[{idx}]")
        for diag in self.diagnostics:
            walk(diag.value, f"diagnostic {diag.name}")
            walk(diag.tolerance, f"diagnostic {diag.name} tolerance")

    def to_json(self) -> str:
        self._check_finite()
        payload = {
            "command": self.command,
            "inputs": self.inputs,
            "rows": self.rows,
            "diagnostics": [
                {"name": d.name, "value": d.value, "tolerance": d.tolerance}
                for d in self.diagnostics
            ],
        }
        return json.dumps(payload, indent=2, allow_nan=False) + "\n"

    def to_csv(self) -> str:
        self._check_finite()
        out = io.StringIO()
        out.write(f"# command: {self.command}\n")
        for key in sorted(self.inputs):
            out.write(f"# input: {key} = {_csv_cell(self.inputs[key])}\n")
        out.write(",".join(str(c) for c in self.columns) + "\n")
        for row in self.rows:
            out.write(",".join(_csv_cell(row.get(c)) for c in self.columns) + "\n")
        for diag in self.diagnostics:
            out.write(
                f"# diagnostic: {diag.name} = {_csv_cell(diag.value)} "
                f"(tolerance {_csv_cell(diag.tolerance)})\n"
            )
        return out.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"unknown format {fmt!r}")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".12g")
    text = str(value)
    if "," in text or '"' in text:
        return '"' + text.replace('"', '""') + '"'
    return text
