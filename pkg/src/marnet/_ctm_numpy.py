"""Pure-numpy enumeration kernel: all machines of a chunk run in lockstep.

Produces count maps bit-identical to the numba kernel. Memory per chunk is
chunk_size * (2*step_bound+1)^2 bytes for the grids, so the default chunk
stays comfortably under 100 MB at step_bound=100.
"""

from __future__ import annotations

import numpy as np

_DR = np.array([-1, 1, 0, 0], dtype=np.int64)
_DC = np.array([0, 0, -1, 1], dtype=np.int64)


def simulate_chunk(states: int, step_bound: int, indices: np.ndarray):
    """Lockstep-simulate the machines with the given enumeration indices.

    Returns (halted mask, grids, wrmin_r, wrmax_r, wrmin_c, wrmax_c) where
    grids[i] holds the final written cells of machine i, offset so the
    origin sits at (step_bound, step_bound).
    """
    base = 8 * (states + 1)
    ndigits = 2 * states
    side = 2 * step_bound + 1
    m = indices.shape[0]

    digits = np.empty((m, ndigits), dtype=np.int64)
    rest = indices.astype(np.int64).copy()
    for k in range(ndigits):
        digits[:, k] = rest % base
        rest //= base
    write = (digits & 1).astype(np.uint8)
    move = (digits >> 1) & 3
    nxt = digits >> 3

    grid = np.zeros((m, side, side), dtype=np.uint8)
    state = np.zeros(m, dtype=np.int64)
    row = np.full(m, step_bound, dtype=np.int64)
    col = np.full(m, step_bound, dtype=np.int64)
    halted = np.zeros(m, dtype=bool)
    wrmin_r = np.full(m, side, dtype=np.int64)
    wrmax_r = np.full(m, -1, dtype=np.int64)
    wrmin_c = np.full(m, side, dtype=np.int64)
    wrmax_c = np.full(m, -1, dtype=np.int64)

    active = np.arange(m)
    for _t in range(step_bound):
        if active.size == 0:
            break
        r = row[active]
        c = col[active]
        sym = grid[active, r, c].astype(np.int64)
        k = 2 * state[active] + sym
        grid[active, r, c] = write[active, k]
        np.minimum.at(wrmin_r, active, r)
        np.maximum.at(wrmax_r, active, r)
        np.minimum.at(wrmin_c, active, c)
        np.maximum.at(wrmax_c, active, c)
        mv = move[active, k]
        row[active] = r + _DR[mv]
        col[active] = c + _DC[mv]
        nx = nxt[active, k]
        halts = nx == states
        halted[active[halts]] = True
        state[active] = np.where(halts, state[active], nx)
        active = active[~halts]
    return halted, grid, wrmin_r, wrmax_r, wrmin_c, wrmax_c


def _tile_codes(out: np.ndarray, d: int) -> np.ndarray:
    h, w = out.shape
    kh, kw = h // d, w // d
    if kh == 0 or kw == 0:
        return np.zeros(0, dtype=np.int64)
    blocks = (
        out[: kh * d, : kw * d]
        .reshape(kh, d, kw, d)
        .transpose(0, 2, 1, 3)
        .reshape(kh * kw, d * d)
        .astype(np.int64)
    )
    weights = 1 << np.arange(d * d - 1, -1, -1, dtype=np.int64)
    return blocks @ weights


def enumerate_range(
    states: int,
    step_bound: int,
    d: int,
    start: int,
    stop: int,
    chunk_size: int = 2048,
) -> tuple[np.ndarray, int, int]:
    """Run machines [start, stop); returns (dense block counts, halted, blocks)."""
    counts = np.zeros(1 << (d * d), dtype=np.int64)
    halted_count = 0
    total_blocks = 0
    for lo in range(start, stop, chunk_size):
        hi = min(lo + chunk_size, stop)
        idx = np.arange(lo, hi, dtype=np.int64)
        halted, grid, r0, r1, c0, c1 = simulate_chunk(states, step_bound, idx)
        halted_count += int(halted.sum())
        for i in np.nonzero(halted)[0]:
            out = grid[i, r0[i] : r1[i] + 1, c0[i] : c1[i] + 1]
            codes = _tile_codes(out, d)
            if codes.size:
                np.add.at(counts, codes, 1)
                total_blocks += codes.size
    return counts, halted_count, total_blocks
