"""Perturbation calculus: per-element information contributions, signatures,
classification into randomness-direction sets, and reprogrammability indices.

The contribution of an element is bdm(G) - bdm(G without the element).
Positive means removal simplifies the graph (the element carries
information); negative means removal randomises it.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .bdm import BlockHistogram, bdm
from .ctm import CtmTable
from .graphs import Graph, GraphElement, delete_element, delete_node


@dataclass(frozen=True)
class Signature:
    """Element contributions sorted most positive first; ties break on the
    element ordering (edges before nodes, then endpoint order)."""

    entries: tuple[tuple[GraphElement, float], ...]
    d: int
    table_id: str

    def contributions(self) -> list[float]:
        return [c for _, c in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class ElementClassification:
    toward_random: frozenset[GraphElement]  # N(G)
    away_from_random: frozenset[GraphElement]  # P(G)
    neutral: frozenset[GraphElement]
    threshold: float


def contribution(g: Graph, element: GraphElement, d: int, table: CtmTable) -> float:
    return bdm(g, d, table).raw - bdm(delete_element(g, element), d, table).raw


def _edge_contributions(
    g: Graph, d: int, table: CtmTable
) -> list[tuple[GraphElement, float]]:
    hist = BlockHistogram(g, d, table)
    base = hist.value()
    out = []
    for u, v in g.sorted_edges():
        hist.flip_edge(u, v)
        out.append((GraphElement.edge(u, v), base - hist.value()))
        hist.flip_edge(u, v)
    return out


def _node_contributions(
    g: Graph, d: int, table: CtmTable
) -> list[tuple[GraphElement, float]]:
    base = bdm(g, d, table).raw
    return [
        (GraphElement.node(i), base - bdm(delete_node(g, i), d, table).raw)
        for i in range(g.n)
    ]


def signature(g: Graph, kind: str, d: int, table: CtmTable) -> Signature:
    """Contributions of all elements of the requested kind ('edges', 'nodes'
    or 'both'). A graph with no such elements yields an empty signature."""
    if kind not in ("edges", "nodes", "both"):
        raise ValueError(f"unknown signature kind {kind!r}")
    entries: list[tuple[GraphElement, float]] = []
    if kind in ("edges", "both"):
        entries.extend(_edge_contributions(g, d, table))
    if kind in ("nodes", "both"):
        entries.extend(_node_contributions(g, d, table))
    entries.sort(key=lambda item: (-item[1], item[0]))
    return Signature(tuple(entries), d, table.table_id)


def classify(
    sig: Signature, n_nodes: int, slack_bits: float = 1.0
) -> ElementClassification:
    """Split a signature at the threshold log2(n_nodes) + slack_bits."""
    if n_nodes < 1:
        raise ValueError("n_nodes must be >= 1")
    if slack_bits < 0:
        raise ValueError("slack_bits must be >= 0")
    threshold = math.log2(n_nodes) + slack_bits
    toward, away, neutral = [], [], []
    for element, value in sig.entries:
        if value < -threshold:
            toward.append(element)
        elif value > threshold:
            away.append(element)
        else:
            neutral.append(element)
    return ElementClassification(
        frozenset(toward), frozenset(away), frozenset(neutral), threshold
    )


def relative_programmability(
    sig: Signature, denominator: str = "max-magnitude"
) -> float:
    """Median absolute deviation of the contributions over their maximum
    magnitude; 0 for empty or all-zero signatures.

    The published definition's denominator is ambiguous between the largest
    magnitude and the entry count; the default reading keeps the index a
    dimensionless ratio in [0, 1]. Pass ``denominator="cardinality"`` for
    the other reading (bits per element, no [0, 1] guarantee).
    """
    values = np.asarray(sig.contributions(), dtype=float)
    if values.size == 0:
        return 0.0
    if denominator == "max-magnitude":
        scale = float(np.abs(values).max())
    elif denominator == "cardinality":
        scale = float(values.size)
    else:
        raise ValueError(f"unknown denominator rule {denominator!r}")
    if scale == 0.0:
        return 0.0
    mad = float(np.median(np.abs(values - np.median(values))))
    return mad / scale


def _interpolated_area(magnitudes: list[float]) -> float:
    # Trapezoidal area over rank-indexed magnitudes; one point is its value.
    if not magnitudes:
        return 0.0
    if len(magnitudes) == 1:
        return magnitudes[0]
    return float(np.trapezoid(np.asarray(magnitudes, dtype=float)))


def absolute_programmability(sig: Signature) -> float:
    """Imbalance of the positive and negative signature mass: the parts'
    interpolated areas compared as |S_P - S_N| / max(S_P, S_N)."""
    pos = [c for c in sig.contributions() if c > 0]
    neg = [-c for c in sig.contributions() if c < 0]
    s_p = _interpolated_area(pos)
    s_n = _interpolated_area(neg)
    m = max(s_p, s_n)
    if m == 0.0:
        return 0.0
    return abs(s_p - s_n) / m


SIGNATURE_CSV_SCHEMA = "marnet.signature.v1"


def signature_to_csv(sig: Signature) -> str:
    """CSV export: element_kind, u, v (empty for nodes), contribution_bits."""
    buf = io.StringIO()
    buf.write(f"# schema={SIGNATURE_CSV_SCHEMA}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["element_kind", "u", "v", "contribution_bits"])
    for element, value in sig.entries:
        v = "" if element.kind == "node" else element.v
        writer.writerow([element.kind, element.u, v, f"{value:.12g}"])
    return buf.getvalue()
