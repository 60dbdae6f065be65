"""Row-oriented experiment results and their versioned CSV/JSON forms.

Every CSV dataset starts with a ``# schema=<name>`` comment line; consumers
(the figure scripts in particular) refuse files whose schema line does not
match what they expect, rather than guessing at columns.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass

RECORD_SCHEMA = "marnet.record.v1"
ASYMMETRY_SCHEMA = "marnet.asymmetry.v1"
GROWTH_SCHEMA = "marnet.growth.v1"
MAR_VS_ER_SCHEMA = "marnet.mar_vs_er.v1"

RECORD_COLUMNS = (
    "graph_id",
    "generator",
    "seed",
    "n",
    "m",
    "adjacency_entropy",
    "degree_entropy",
    "block_entropy",
    "bdm",
    "nbdm",
    "p_r",
    "p_a",
    "deficiency",
)


@dataclass(frozen=True)
class ExperimentRecord:
    graph_id: str
    generator: str
    seed: int | None
    n: int
    m: int
    adjacency_entropy: float
    degree_entropy: float
    block_entropy: float
    bdm: float
    nbdm: float
    p_r: float
    p_a: float
    deficiency: float | None = None

    def __post_init__(self):
        for name in ("adjacency_entropy", "degree_entropy", "block_entropy",
                     "bdm", "nbdm", "p_r", "p_a"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value}")
        if self.deficiency is not None and not math.isfinite(self.deficiency):
            raise ValueError("deficiency must be finite when present")


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def records_to_csv(records: list[ExperimentRecord]) -> str:
    buf = io.StringIO()
    buf.write(f"# schema={RECORD_SCHEMA}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RECORD_COLUMNS)
    for rec in records:
        row = asdict(rec)
        writer.writerow([_fmt(row[col]) for col in RECORD_COLUMNS])
    return buf.getvalue()


def records_to_json(records: list[ExperimentRecord]) -> str:
    payload = {
        "schema": RECORD_SCHEMA,
        "rows": [asdict(rec) for rec in records],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def rows_to_csv(schema: str, columns: tuple[str, ...], rows: list[dict]) -> str:
    buf = io.StringIO()
    buf.write(f"# schema={schema}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(row[col]) for col in columns])
    return buf.getvalue()


def rows_to_json(schema: str, rows: list[dict]) -> str:
    return json.dumps({"schema": schema, "rows": rows}, indent=2, sort_keys=True) + "\n"


def read_schema_line(text: str) -> str:
    first = text.split("\n", 1)[0].strip()
    prefix = "# schema="
    if not first.startswith(prefix):
        raise ValueError("missing schema comment line")
    return first[len(prefix):]
