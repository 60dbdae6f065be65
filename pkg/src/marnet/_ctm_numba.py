"""Numba-jitted enumeration kernel. See machines.py for the encoding."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _enumerate(states, step_bound, d, start, stop, counts):  # pragma: no cover
    base = 8 * (states + 1)
    ndigits = 2 * states
    side = 2 * step_bound + 1
    grid = np.zeros((side, side), dtype=np.uint8)
    dr = np.array([-1, 1, 0, 0], dtype=np.int64)
    dc = np.array([0, 0, -1, 1], dtype=np.int64)
    write = np.zeros(ndigits, dtype=np.uint8)
    move = np.zeros(ndigits, dtype=np.int64)
    nxt = np.zeros(ndigits, dtype=np.int64)

    halted_count = 0
    total_blocks = 0
    for idx in range(start, stop):
        m = idx
        for k in range(ndigits):
            digit = m % base
            m //= base
            write[k] = digit & 1
            move[k] = (digit >> 1) & 3
            nxt[k] = digit >> 3
        state = 0
        r = step_bound
        c = step_bound
        halted = False
        wrmin_r = side
        wrmax_r = -1
        wrmin_c = side
        wrmax_c = -1
        for _t in range(step_bound):
            k = 2 * state + grid[r, c]
            grid[r, c] = write[k]
            if r < wrmin_r:
                wrmin_r = r
            if r > wrmax_r:
                wrmax_r = r
            if c < wrmin_c:
                wrmin_c = c
            if c > wrmax_c:
                wrmax_c = c
            mv = move[k]
            r += dr[mv]
            c += dc[mv]
            nx = nxt[k]
            if nx == states:
                halted = True
                break
            state = nx
        if halted:
            halted_count += 1
            h = wrmax_r - wrmin_r + 1
            w = wrmax_c - wrmin_c + 1
            for bi in range(h // d):
                for bj in range(w // d):
                    code = 0
                    for i in range(d):
                        for j in range(d):
                            code = (code << 1) | grid[
                                wrmin_r + bi * d + i, wrmin_c + bj * d + j
                            ]
                    counts[code] += 1
                    total_blocks += 1
        if wrmax_r >= 0:
            for i in range(wrmin_r, wrmax_r + 1):
                for j in range(wrmin_c, wrmax_c + 1):
                    grid[i, j] = 0
    return halted_count, total_blocks


def enumerate_range(
    states: int, step_bound: int, d: int, start: int, stop: int
) -> tuple[np.ndarray, int, int]:
    """Run machines [start, stop); returns (dense block counts, halted, blocks)."""
    counts = np.zeros(1 << (d * d), dtype=np.int64)
    halted, total = _enumerate(states, step_bound, d, start, stop, counts)
    return counts, halted, total
