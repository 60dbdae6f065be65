"""Small 2-dimensional binary Turing machines and their enumeration order.

Formalism: a single head on an unbounded 2-D grid of cells initialised to 0,
binary alphabet {0, 1}, four moves (up, down, left, right), and an explicit
halt pseudo-state. The machine starts in state 0 at the origin. Each step
reads the cell, writes a symbol, moves one cell, and either transitions or
halts. On halt the output is the contents of the minimal bounding box of all
cells a write was applied to (not merely visited).

Enumeration order: a machine with ``s`` states is a base-``8(s+1)`` number
with ``2s`` digits. Digit ``2q + r`` encodes the rule for (state q, read r)
as ``(next * 4 + move) * 2 + write`` where ``next == s`` means halt and moves
are numbered up=0, down=1, left=2, right=3. This fixes the meaning of a
machine index across implementations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MOVES = ("up", "down", "left", "right")
_MOVE_DELTA = {"up": (-1, 0), "down": (1, 0), "left": (0, -1), "right": (0, 1)}

HALT = -1  # next-state sentinel in the public transition table


@dataclass(frozen=True)
class TuringMachine2D:
    """Total transition table: (state, symbol) -> (write, move, next).

    ``next`` is a state index or HALT. The table must define every
    (state, symbol) pair for symbols 0 and 1.
    """

    state_count: int
    transitions: dict[tuple[int, int], tuple[int, str, int]]

    def __post_init__(self):
        if self.state_count < 1:
            raise ValueError("state_count must be >= 1")
        for q in range(self.state_count):
            for r in (0, 1):
                if (q, r) not in self.transitions:
                    raise ValueError(f"transition table missing ({q},{r})")
        for (q, r), (w, mv, nx) in self.transitions.items():
            if not (0 <= q < self.state_count and r in (0, 1)):
                raise ValueError(f"invalid rule key ({q},{r})")
            if w not in (0, 1):
                raise ValueError(f"invalid write symbol {w}")
            if mv not in MOVES:
                raise ValueError(f"invalid move {mv!r}")
            if nx != HALT and not (0 <= nx < self.state_count):
                raise ValueError(f"invalid next state {nx}")


@dataclass(frozen=True)
class RunResult:
    halted: bool
    steps: int
    output: np.ndarray | None  # bounding-box contents when halted, else None


def machine_space_size(states: int) -> int:
    """Number of total transition tables: (2 * 4 * (states+1)) ** (2 * states).

    Raises OverflowError when the count exceeds the 64-bit index range used
    by the enumeration kernels.
    """
    if states < 1:
        raise ValueError("states must be >= 1")
    count = (8 * (states + 1)) ** (2 * states)
    if count >= 2**64:
        raise OverflowError(
            f"machine space for {states} states exceeds 64-bit enumeration indices"
        )
    return count


def machine_from_index(states: int, index: int) -> TuringMachine2D:
    """Decode an enumeration index into a machine (see module docstring)."""
    size = machine_space_size(states)
    if not 0 <= index < size:
        raise ValueError(f"index {index} outside space of size {size}")
    base = 8 * (states + 1)
    transitions = {}
    m = index
    for k in range(2 * states):
        digit = m % base
        m //= base
        write = digit & 1
        move = (digit >> 1) & 3
        nxt = digit >> 3
        transitions[(k // 2, k % 2)] = (
            write,
            MOVES[move],
            HALT if nxt == states else nxt,
        )
    return TuringMachine2D(states, transitions)


def run_machine(machine: TuringMachine2D, step_bound: int) -> RunResult:
    """Reference single-machine simulator (dict-backed sparse grid)."""
    if step_bound < 1:
        raise ValueError("step_bound must be >= 1")
    grid: dict[tuple[int, int], int] = {}
    written: set[tuple[int, int]] = set()
    state = 0
    r = c = 0
    for step in range(1, step_bound + 1):
        sym = grid.get((r, c), 0)
        write, move, nxt = machine.transitions[(state, sym)]
        grid[(r, c)] = write
        written.add((r, c))
        dr, dc = _MOVE_DELTA[move]
        r += dr
        c += dc
        if nxt == HALT:
            rows = [p[0] for p in written]
            cols = [p[1] for p in written]
            r0, r1 = min(rows), max(rows)
            c0, c1 = min(cols), max(cols)
            out = np.zeros((r1 - r0 + 1, c1 - c0 + 1), dtype=np.uint8)
            for (i, j), val in grid.items():
                if val and (i, j) in written:
                    out[i - r0, j - c0] = val
            return RunResult(True, step, out)
        state = nxt
    return RunResult(False, step_bound, None)
