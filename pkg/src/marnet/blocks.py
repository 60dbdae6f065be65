"""Binary d x d blocks encoded as integers, and matrix partitioning.

A block is keyed by the integer formed from its row-major bits, most
significant bit first; the same keying is used by CTM tables, BDM, and the
table file format. Partitioning is non-overlapping, anchored top-left, with
the remainder strip discarded when d does not divide the matrix size.
"""

from __future__ import annotations

import numpy as np


def encode_block(block: np.ndarray) -> int:
    block = np.asarray(block)
    d = block.shape[0]
    if block.shape != (d, d):
        raise ValueError("block must be square")
    weights = 1 << np.arange(d * d - 1, -1, -1, dtype=np.int64)
    return int(block.reshape(-1).astype(np.int64) @ weights)


def decode_block(code: int, d: int) -> np.ndarray:
    bits = [(code >> (d * d - 1 - i)) & 1 for i in range(d * d)]
    return np.array(bits, dtype=np.uint8).reshape(d, d)


def partition_codes(matrix: np.ndarray, d: int) -> np.ndarray:
    """Codes of the non-overlapping d x d blocks of `matrix`, row-major order."""
    if d < 1:
        raise ValueError("d must be >= 1")
    n = matrix.shape[0]
    k = n // d
    if k == 0:
        return np.zeros(0, dtype=np.int64)
    blocks = (
        matrix[: k * d, : k * d]
        .reshape(k, d, k, d)
        .transpose(0, 2, 1, 3)
        .reshape(k * k, d * d)
        .astype(np.int64)
    )
    weights = 1 << np.arange(d * d - 1, -1, -1, dtype=np.int64)
    return blocks @ weights


def block_histogram(matrix: np.ndarray, d: int) -> dict[int, int]:
    codes = partition_codes(matrix, d)
    uniq, cnt = np.unique(codes, return_counts=True)
    return dict(zip(uniq.tolist(), cnt.tolist()))
