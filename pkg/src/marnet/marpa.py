"""Greedy algorithmic randomisation of graphs (MARPA).

Each step evaluates every single-edge addition (bottom-up, from the empty
graph) or deletion (top-down, from the complete graph) and keeps the
candidate with maximal estimated complexity. Equal complexity counts as an
improvement so plateaus can be traversed; a strict decrease of the best
candidate terminates the run, as does reaching the target edge count. Ties
break on the lexicographically first candidate after rotating the candidate
order by the configured rotation index, which keeps runs fully
deterministic and lets ensembles explore alternate argmax members.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .bdm import BlockHistogram, bdm
from .ctm import CtmTable
from .graphs import Graph, complete_graph, empty_graph, to_edge_list_text

MODES = ("bottomup", "topdown")
STOP_TARGET = "target-size"
STOP_DECREASE = "complexity-decrease"


@dataclass(frozen=True)
class MarConfig:
    nodes: int
    table: CtmTable
    target_edges: int | None = None
    d: int = 2
    tie_rotation: int = 0
    seed: int | None = None  # provenance only; the greedy is deterministic

    def __post_init__(self):
        if self.nodes < 1:
            raise ValueError("nodes must be >= 1")
        if self.target_edges is not None:
            if not 0 <= self.target_edges <= self.nodes * (self.nodes - 1) // 2:
                raise ValueError("target_edges out of range")


@dataclass(frozen=True)
class MarStep:
    graph: Graph
    edge: tuple[int, int]
    complexity: float
    gain: float


@dataclass(frozen=True)
class StepRecord:
    op: str  # "add" or "delete"
    u: int
    v: int
    complexity: float
    edge_count: int


@dataclass(frozen=True)
class MarTrajectory:
    steps: tuple[StepRecord, ...]
    final: Graph
    final_complexity: float
    mode: str
    stop_reason: str
    nodes: int
    target_edges: int | None
    d: int
    table_id: str
    tie_rotation: int
    seed: int | None


@dataclass(frozen=True)
class MarCandidate:
    graph: Graph
    complexity: float
    tie_rotation: int


@dataclass(frozen=True)
class Deficiency:
    bits: float
    clamped: bool
    reference: Graph


def _candidates(g: Graph, mode: str) -> list[tuple[int, int]]:
    if mode == "add":
        return [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if (u, v) not in g.edges
        ]
    return g.sorted_edges()


def _best_flip(
    hist: BlockHistogram,
    candidates: list[tuple[int, int]],
    rotation: int,
) -> tuple[float, tuple[int, int]]:
    k = rotation % len(candidates)
    best_val = None
    best_edge = None
    for u, v in candidates[k:] + candidates[:k]:
        hist.flip_edge(u, v)
        val = hist.value()
        hist.flip_edge(u, v)
        if best_val is None or val > best_val:
            best_val = val
            best_edge = (u, v)
    return best_val, best_edge


def marpa_step(
    g: Graph, mode: str, d: int, table: CtmTable, tie_rotation: int = 0
) -> MarStep | None:
    """One greedy step; None when the best candidate strictly decreases
    complexity. mode is "add" or "delete"."""
    if mode not in ("add", "delete"):
        raise ValueError(f"unknown step mode {mode!r}")
    candidates = _candidates(g, mode)
    if not candidates:
        raise ValueError(f"no {mode} candidates on this graph")
    hist = BlockHistogram(g, d, table)
    current = hist.value()
    best_val, (u, v) = _best_flip(hist, candidates, tie_rotation)
    if best_val < current:
        return None
    hist.flip_edge(u, v)
    return MarStep(
        Graph.from_adjacency(hist.matrix), (u, v), best_val, best_val - current
    )


def marpa_run(config: MarConfig, mode: str) -> MarTrajectory:
    """Run the greedy to the target size or the complexity peak.

    Bottom-up starts empty and adds; top-down starts complete and deletes.
    Since equal-complexity steps are accepted, the complexity sequence is
    non-decreasing until the stop, and the final state is a maximiser of the
    whole trajectory in both modes.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")
    op = "add" if mode == "bottomup" else "delete"
    g = empty_graph(config.nodes) if mode == "bottomup" else complete_graph(config.nodes)
    hist = BlockHistogram(g, config.d, config.table)
    current = hist.value()
    n = config.nodes
    edge_set = set(g.edges)
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    steps: list[StepRecord] = []
    stop = STOP_TARGET
    while True:
        if config.target_edges is not None and len(edge_set) == config.target_edges:
            break
        if op == "add":
            candidates = [e for e in all_pairs if e not in edge_set]
        else:
            candidates = sorted(edge_set)
        if not candidates:
            break  # size exhausted without a decrease; treat as target-size
        best_val, (u, v) = _best_flip(hist, candidates, config.tie_rotation)
        if best_val < current:
            stop = STOP_DECREASE
            break
        hist.flip_edge(u, v)
        current = best_val
        if op == "add":
            edge_set.add((u, v))
        else:
            edge_set.remove((u, v))
        steps.append(StepRecord(op, u, v, current, len(edge_set)))
    return MarTrajectory(
        steps=tuple(steps),
        final=Graph.from_adjacency(hist.matrix),
        final_complexity=current,
        mode=mode,
        stop_reason=stop,
        nodes=config.nodes,
        target_edges=config.target_edges,
        d=config.d,
        table_id=config.table.table_id,
        tie_rotation=config.tie_rotation,
        seed=config.seed,
    )


def mar_ensemble(config: MarConfig, count: int, mode: str) -> list[MarCandidate]:
    """`count` candidates from distinct tie-break rotations; duplicates are
    possible and meaningful (the argmax set may be small)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    out = []
    for k in range(count):
        traj = marpa_run(replace(config, tie_rotation=k), mode)
        out.append(MarCandidate(traj.final, traj.final_complexity, k))
    return out


def randomness_deficiency(
    g: Graph, d: int, table: CtmTable, mode: str = "bottomup"
) -> Deficiency:
    """Complexity gap to a greedily randomised reference of the same node
    and edge count. Small negative estimates are estimator noise and are
    clamped to zero with a flag."""
    if g.n < 1:
        raise ValueError("graph must have at least one node")
    config = MarConfig(nodes=g.n, table=table, target_edges=g.edge_count, d=d)
    reference = marpa_run(config, mode).final
    raw = bdm(reference, d, table).raw - bdm(g, d, table).raw
    if raw < 0:
        return Deficiency(0.0, True, reference)
    return Deficiency(raw, False, reference)


def trajectory_to_json(traj: MarTrajectory) -> str:
    payload = {
        "config": {
            "nodes": traj.nodes,
            "target_edges": traj.target_edges,
            "d": traj.d,
            "table_id": traj.table_id,
            "tie_rotation": traj.tie_rotation,
            "seed": traj.seed,
        },
        "mode": traj.mode,
        "stop_reason": traj.stop_reason,
        "steps": [
            {
                "op": s.op,
                "u": s.u,
                "v": s.v,
                "complexity": s.complexity,
                "edge_count": s.edge_count,
            }
            for s in traj.steps
        ],
        "final_complexity": traj.final_complexity,
        "final_graph": to_edge_list_text(traj.final),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
