"""Block-decomposition complexity: raw estimate, bounds, and normalisation.

The adjacency matrix is cut into non-overlapping d x d blocks (top-left
anchored, remainder strip discarded); the estimate is the sum over distinct
blocks of log2(multiplicity) + table value. All sums use ``math.fsum``, so
the result is independent of summation order and identical between the
scratch path and the incremental histogram path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import blocks as _blocks
from .ctm import CtmTable, NoTableDataError
from .graphs import Graph

PARTITION_STRATEGY = "nonoverlap-topleft-drop"


@dataclass(frozen=True)
class BdmValue:
    raw: float
    d: int
    partition: str
    table_id: str

    def __float__(self) -> float:
        return self.raw


@dataclass(frozen=True)
class NbdmValue:
    normalized: float
    min_bound: float
    max_bound: float
    raw: float
    clamped: bool

    def __float__(self) -> float:
        return self.normalized


def _require_match(d: int, table: CtmTable) -> None:
    if table.d != d:
        raise ValueError(f"table block size {table.d} does not match d={d}")


def bdm_from_histogram(hist: dict[int, int], table: CtmTable) -> float:
    return math.fsum(
        math.log2(count) + table.value_of_code(code)
        for code, count in sorted(hist.items())
    )


def bdm(g: Graph, d: int, table: CtmTable) -> BdmValue:
    """Complexity estimate of the graph's adjacency matrix in bits.

    Graphs smaller than one block yield 0.0 (nothing to decompose).
    """
    _require_match(d, table)
    if g.n < 1:
        raise ValueError("graph must have at least one node")
    hist = _blocks.block_histogram(g.adjacency(), d)
    return BdmValue(bdm_from_histogram(hist, table), d, PARTITION_STRATEGY,
                    table.table_id)


def min_bdm(n: int, d: int, table: CtmTable) -> float:
    """Lower bound floor(n/d) + min table value for n x n matrices."""
    _check_bounds_args(n, d, table)
    return n // d + table.min_value


def min_bdm_uniform(n: int, d: int, table: CtmTable) -> float:
    """Decomposition value of an actual uniform matrix: log2(floor(n/d)^2)
    plus the minimum table value. Differs from min_bdm, whose linear first
    term is the published bound; both are exposed for inspection."""
    _check_bounds_args(n, d, table)
    return math.log2((n // d) ** 2) + table.min_value


def _check_bounds_args(n: int, d: int, table: CtmTable) -> None:
    _require_match(d, table)
    if n < d:
        raise ValueError(f"n={n} smaller than block size d={d}")
    if not table.entries:
        raise NoTableDataError("table has no entries")


def max_bdm_composition(n: int, d: int, table: CtmTable) -> dict[int, int]:
    """Greedy block multiset of the most-complex n x n matrix composition.

    floor(n/d)^2 slots are dealt round-robin over the table's blocks in
    descending value order, so that the total is exact, multiplicities differ
    by at most one, and more complex blocks never receive fewer slots.
    """
    _check_bounds_args(n, d, table)
    slots = (n // d) ** 2
    ranked = sorted(table.entries, key=lambda code: (-table.entries[code], code))
    if slots <= len(ranked):
        return {code: 1 for code in ranked[:slots]}
    q, r = divmod(slots, len(ranked))
    return {code: q + (1 if i < r else 0) for i, code in enumerate(ranked)}


def max_bdm(n: int, d: int, table: CtmTable) -> float:
    comp = max_bdm_composition(n, d, table)
    return math.fsum(
        math.log2(count) + table.entries[code]
        for code, count in sorted(comp.items())
        if count > 0
    )


def nbdm(g: Graph, d: int, table: CtmTable) -> NbdmValue:
    """Normalised complexity in [0, 1]; out-of-range raws are clamped and
    flagged rather than rejected."""
    lo = min_bdm(g.n, d, table)
    hi = max_bdm(g.n, d, table)
    if not hi > lo:
        raise ValueError(f"degenerate bounds: max_bdm={hi} <= min_bdm={lo}")
    raw = bdm(g, d, table).raw
    x = (raw - lo) / (hi - lo)
    clamped = x < 0.0 or x > 1.0
    return NbdmValue(min(1.0, max(0.0, x)), lo, hi, raw, clamped)


class BlockHistogram:
    """Mutable block histogram of one adjacency matrix, for cheap what-if
    edge flips: each flip touches at most two blocks, so a candidate costs
    O(1) table lookups plus a short resum over distinct block types."""

    def __init__(self, g: Graph, d: int, table: CtmTable):
        _require_match(d, table)
        self.d = d
        self.table = table
        self.matrix = np.array(g.adjacency(), dtype=np.uint8)  # private copy
        self.counts = _blocks.block_histogram(self.matrix, d)
        self._weights = 1 << np.arange(d * d - 1, -1, -1, dtype=np.int64)

    def _block_code(self, bi: int, bj: int) -> int:
        d = self.d
        block = self.matrix[bi * d : (bi + 1) * d, bj * d : (bj + 1) * d]
        return int(block.reshape(-1).astype(np.int64) @ self._weights)

    def _bump(self, code: int, delta: int) -> None:
        c = self.counts.get(code, 0) + delta
        if c < 0:
            raise AssertionError("negative block count")
        if c == 0:
            self.counts.pop(code, None)
        else:
            self.counts[code] = c

    def flip_edge(self, u: int, v: int) -> None:
        """Toggle edge (u, v): updates the matrix and the affected blocks."""
        d = self.d
        k = self.matrix.shape[0] // d
        touched = {(u // d, v // d), (v // d, u // d)}
        inside = [(bi, bj) for bi, bj in touched if bi < k and bj < k]
        for bi, bj in inside:
            self._bump(self._block_code(bi, bj), -1)
        val = 1 - self.matrix[u, v]
        self.matrix[u, v] = val
        self.matrix[v, u] = val
        for bi, bj in inside:
            self._bump(self._block_code(bi, bj), +1)

    def value(self) -> float:
        return bdm_from_histogram(self.counts, self.table)
