"""Classical information measures on graphs.

Adjacency entropy is the binary Shannon entropy of the off-diagonal 0/1
entries (the diagonal is excluded: self-loops are structurally impossible,
and counting their forced zeros would deflate dense graphs). Degree entropy
treats the degree sequence as an unordered multiset. Block entropy minimises
the block-type Shannon entropy over sampled node relabellings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import blocks as _blocks
from .graphs import Graph


@dataclass(frozen=True)
class EntropyReport:
    adjacency: float  # bits per symbol, in [0, 1]
    degree: float
    block: float
    block_d: int
    labellings: int
    seed: int | None


def _shannon(counts: np.ndarray) -> float:
    total = counts.sum()
    if total == 0:
        return 0.0
    p = counts[counts > 0] / total
    return float(-(p * np.log2(p)).sum())


def adjacency_entropy(g: Graph) -> float:
    if g.n < 1:
        raise ValueError("graph must have at least one node")
    total = g.n * (g.n - 1)
    if total == 0:
        return 0.0
    ones = 2 * g.edge_count
    return _shannon(np.array([total - ones, ones]))


def degree_entropy(g: Graph) -> float:
    if g.n < 1:
        raise ValueError("graph must have at least one node")
    _, counts = np.unique(g.degrees(), return_counts=True)
    return _shannon(counts)


def block_entropy(
    g: Graph, d: int, labellings: int = 20, seed: int = 0
) -> float:
    """Minimum block-type entropy over sampled labellings plus the identity.

    The exact minimum over all |V|! labellings is intractable; this sampled
    minimum is an upper bound on it. Samples are drawn sequentially from one
    seeded generator, so a larger sample count extends (never replaces) a
    smaller one with the same seed.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if labellings < 1:
        raise ValueError("labellings must be >= 1")
    a = g.adjacency()
    best = _labelling_entropy(a, d)
    rng = np.random.default_rng(seed)
    for _ in range(labellings):
        perm = rng.permutation(g.n)
        best = min(best, _labelling_entropy(a[np.ix_(perm, perm)], d))
    return best


def _labelling_entropy(a: np.ndarray, d: int) -> float:
    codes = _blocks.partition_codes(a, d)
    if codes.size == 0:
        return 0.0
    _, counts = np.unique(codes, return_counts=True)
    return _shannon(counts)


def entropy_report(
    g: Graph, d: int, labellings: int = 20, seed: int = 0
) -> EntropyReport:
    return EntropyReport(
        adjacency=adjacency_entropy(g),
        degree=degree_entropy(g),
        block=block_entropy(g, d, labellings, seed),
        block_d=d,
        labellings=labellings,
        seed=seed,
    )


def binary_entropy(p: float) -> float:
    """H(p) = -p log2 p - (1-p) log2 (1-p); 0 at the endpoints."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    if p in (0.0, 1.0):
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)
