"""Coding-theorem tables: build by exhaustive machine enumeration, query,
and load/save in a checksummed text format.

Entry values are -log2(block frequency) over all d x d blocks tiled from
halting outputs, rounded to 12 significant digits so that the on-disk
representation round-trips exactly. Blocks never produced by the
enumeration are answered by the ``pessimistic-max`` fallback: one bit above
the largest table value, i.e. they are treated as maximally random at this
scale.
"""

from __future__ import annotations

import importlib
import importlib.resources
import math
import zlib
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import backend as _backend
from . import blocks as _blocks
from .machines import machine_space_size

FORMAT_VERSION = "v1"
FALLBACK_PESSIMISTIC_MAX = "pessimistic-max"


class TableError(Exception):
    pass


class TableVersionError(TableError):
    pass


class TableChecksumError(TableError):
    pass


class TableFormatError(TableError):
    pass


class NoTableDataError(TableError):
    """Enumeration produced no usable blocks (or a table would be empty)."""


@dataclass(frozen=True)
class CtmTable:
    """Map from d x d binary block (as integer code) to complexity in bits."""

    d: int
    entries: dict[int, float]
    space: str
    step_bound: int
    halted: int
    fallback: str = FALLBACK_PESSIMISTIC_MAX
    counts: dict[int, int] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if not self.entries:
            raise NoTableDataError("table has no entries")
        if self.fallback != FALLBACK_PESSIMISTIC_MAX:
            raise ValueError(f"unknown fallback policy {self.fallback!r}")
        for code, v in self.entries.items():
            if not 0 <= code < (1 << (self.d * self.d)):
                raise ValueError(f"block code {code} out of range for d={self.d}")
            if not (v >= 0 and math.isfinite(v)):
                raise ValueError(f"ctm value must be finite and >= 0, got {v}")

    @property
    def max_value(self) -> float:
        return max(self.entries.values())

    @property
    def min_value(self) -> float:
        return min(self.entries.values())

    @property
    def fallback_value(self) -> float:
        return self.max_value + 1.0

    def value_of_code(self, code: int) -> float:
        return self.entries.get(code, self.fallback_value)

    def lookup(self, block: np.ndarray) -> float:
        """Complexity of a d x d block; unseen blocks get the fallback value."""
        block = np.asarray(block)
        if block.shape != (self.d, self.d):
            raise ValueError(
                f"block shape {block.shape} does not match table d={self.d}"
            )
        return self.value_of_code(_blocks.encode_block(block))

    def body_text(self) -> str:
        lines = [
            f"CTMTABLE {FORMAT_VERSION} d={self.d} space={self.space} "
            f"steps={self.step_bound} total={self.halted}"
        ]
        hex_width = (self.d * self.d + 3) // 4
        for code in sorted(self.entries):
            lines.append(f"{code:0{hex_width}x} {self.entries[code]:.12g}")
        return "\n".join(lines) + "\n"

    @property
    def table_id(self) -> str:
        """CRC32 of the canonical serialisation; used as provenance id."""
        return f"{zlib.crc32(self.body_text().encode('utf-8')):08x}"


def lookup(table: CtmTable, block: np.ndarray) -> float:
    return table.lookup(block)


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _counts_to_table(
    counts: np.ndarray, d: int, space: str, step_bound: int, halted: int
) -> CtmTable:
    total = int(counts.sum())
    if halted == 0:
        raise NoTableDataError("no machine in the space halted")
    if total == 0:
        raise NoTableDataError(
            f"halting outputs produced no {d}x{d} blocks at this scale"
        )
    nz = np.nonzero(counts)[0]
    entries = {
        int(code): _round12(-math.log2(counts[code] / total)) for code in nz
    }
    count_map = {int(code): int(counts[code]) for code in nz}
    return CtmTable(d, entries, space, step_bound, halted, counts=count_map)


def build_ctm_table(
    states: int,
    step_bound: int,
    d: int,
    max_states: int = 2,
    backend: str | None = None,
    partitions: int = 1,
) -> CtmTable:
    """Enumerate every machine with the given state count and tally blocks.

    The index range may be split into any number of partitions; counts are
    merged by addition, so the result is independent of the partitioning.
    """
    if states > max_states:
        raise ValueError(
            f"states={states} above configured maximum {max_states}; "
            "raise max_states explicitly for larger builds"
        )
    if step_bound < 1:
        raise ValueError("step_bound must be >= 1")
    if d < 1:
        raise ValueError("d must be >= 1")
    if d > 4:
        raise ValueError("block sizes above 4 exceed the dense-count kernels")
    if partitions < 1:
        raise ValueError("partitions must be >= 1")

    name = _backend.active_backend(backend)
    kernel = importlib.import_module(f"._ctm_{name}", package=__package__)

    n_machines = machine_space_size(states)
    bounds = np.linspace(0, n_machines, partitions + 1, dtype=np.int64)
    counts = np.zeros(1 << (d * d), dtype=np.int64)
    halted = 0
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        part_counts, part_halted, _ = kernel.enumerate_range(
            states, step_bound, d, int(lo), int(hi)
        )
        counts += part_counts
        halted += part_halted
    return _counts_to_table(counts, d, f"tm({states},2)", step_bound, halted)


# ---------------------------------------------------------------------------
# file format

def save_table(table: CtmTable, path) -> None:
    body = table.body_text()
    crc = zlib.crc32(body.encode("utf-8"))
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(body)
        f.write(f"CRC32 {crc:08x}\n")


def _parse_header(line: str) -> tuple[int, str, int, int]:
    parts = line.split()
    if len(parts) != 6 or parts[0] != "CTMTABLE":
        raise TableFormatError(f"not a CTM table header: {line!r}")
    if parts[1] != FORMAT_VERSION:
        raise TableVersionError(
            f"unsupported table version {parts[1]!r}, expected {FORMAT_VERSION}"
        )
    fields = {}
    for part in parts[2:]:
        key, _, val = part.partition("=")
        if not val:
            raise TableFormatError(f"malformed header field {part!r}")
        fields[key] = val
    try:
        return (
            int(fields["d"]),
            fields["space"],
            int(fields["steps"]),
            int(fields["total"]),
        )
    except (KeyError, ValueError) as exc:
        raise TableFormatError(f"malformed header {line!r}") from exc


def load_table(path) -> CtmTable:
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2:
        raise TableFormatError("truncated table file")
    crc_line = lines[-1]
    if not crc_line.startswith("CRC32 "):
        raise TableFormatError("missing CRC32 trailer")
    try:
        stated_crc = int(crc_line.split()[1], 16)
    except (IndexError, ValueError):
        raise TableFormatError(f"malformed CRC32 trailer {crc_line!r}") from None
    body = "\n".join(lines[:-1]) + "\n"
    actual_crc = zlib.crc32(body.encode("utf-8"))
    if actual_crc != stated_crc:
        raise TableChecksumError(
            f"checksum mismatch: file says {stated_crc:08x}, body is {actual_crc:08x}"
        )
    d, space, steps, halted = _parse_header(lines[0])
    hex_width = (d * d + 3) // 4
    entries = {}
    for lineno, raw in enumerate(lines[1:-1], start=2):
        parts = raw.split()
        if len(parts) != 2 or len(parts[0]) != hex_width:
            raise TableFormatError(f"line {lineno}: malformed entry {raw!r}")
        try:
            code = int(parts[0], 16)
            value = float(parts[1])
        except ValueError:
            raise TableFormatError(f"line {lineno}: malformed entry {raw!r}") from None
        if code in entries:
            raise TableFormatError(f"line {lineno}: duplicate block {parts[0]}")
        entries[code] = value
    return CtmTable(d, entries, space, steps, halted)


@lru_cache(maxsize=None)
def default_table() -> CtmTable:
    """The standard table shipped with the package: tm(3,2), 100 steps, d=2.

    Full enumeration of the 1,073,741,824-machine space; covers all sixteen
    2x2 blocks, so no lookup falls back. Rebuild with
    ``marnet ctm build --states 3 --steps 100 --d 2``.
    """
    ref = importlib.resources.files(__package__) / "data" / "ctm32_d2.ctm"
    with importlib.resources.as_file(ref) as path:
        return load_table(path)
