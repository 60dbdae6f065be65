"""Desk-scale experiment datasets behind the CLI's `experiment` command.

Each builder returns (schema, columns, rows); the CLI serialises them. All
randomness is seeded and recorded in the rows.
"""

from __future__ import annotations

from . import dynamics, entropy
from .bdm import BlockHistogram, bdm, nbdm
from .ctm import CtmTable
from .graphs import Graph, complete_graph, erdos_renyi, erdos_renyi_gnm
from .marpa import MarConfig, mar_ensemble, marpa_run
from .records import ASYMMETRY_SCHEMA, GROWTH_SCHEMA, MAR_VS_ER_SCHEMA

ASYMMETRY_COLUMNS = ("family", "n", "seed", "u", "v", "delta_bdm")
GROWTH_COLUMNS = ("n", "bdm_complete", "bdm_er", "bdm_mar")
MAR_VS_ER_COLUMNS = (
    "graph_id",
    "family",
    "n",
    "m",
    "bdm",
    "nbdm",
    "adjacency_entropy",
    "degree_sequence",
)


def edge_deltas(g: Graph, d: int, table: CtmTable) -> list[tuple[int, int, float]]:
    """Signed bdm(G) - bdm(G without e) for every edge e."""
    hist = BlockHistogram(g, d, table)
    base = hist.value()
    out = []
    for u, v in g.sorted_edges():
        hist.flip_edge(u, v)
        out.append((u, v, base - hist.value()))
        hist.flip_edge(u, v)
    return out


def asymmetry_dataset(
    table: CtmTable, d: int, sizes=(8, 16, 32), seeds: int = 10
):
    rows = []
    for n in sizes:
        for u, v, delta in edge_deltas(complete_graph(n), d, table):
            rows.append(
                {"family": "complete", "n": n, "seed": None, "u": u, "v": v,
                 "delta_bdm": delta}
            )
        for seed in range(seeds):
            g = erdos_renyi(n, 0.5, seed)
            for u, v, delta in edge_deltas(g, d, table):
                rows.append(
                    {"family": "er", "n": n, "seed": seed, "u": u, "v": v,
                     "delta_bdm": delta}
                )
    return ASYMMETRY_SCHEMA, ASYMMETRY_COLUMNS, rows


def growth_dataset(
    table: CtmTable, d: int, sizes=(8, 12, 16, 20, 24, 28, 32), seed: int = 0
):
    rows = []
    for n in sizes:
        mar = marpa_run(MarConfig(nodes=n, table=table, d=d), "bottomup")
        rows.append(
            {
                "n": n,
                "bdm_complete": bdm(complete_graph(n), d, table).raw,
                "bdm_er": bdm(erdos_renyi(n, 0.5, seed), d, table).raw,
                "bdm_mar": mar.final_complexity,
            }
        )
    return GROWTH_SCHEMA, GROWTH_COLUMNS, rows


def mar_vs_er_dataset(
    table: CtmTable,
    d: int,
    n: int,
    ensemble: int = 5,
    er_samples: int = 20,
):
    """MAR candidates against edge-count-matched uniform random graphs."""
    rows = []
    candidates = mar_ensemble(
        MarConfig(nodes=n, table=table, d=d), ensemble, "bottomup"
    )
    matched_m = candidates[0].graph.edge_count
    for k, cand in enumerate(candidates):
        rows.append(_mar_vs_er_row(f"mar-{k}", "mar", cand.graph, d, table))
    for seed in range(er_samples):
        g = erdos_renyi_gnm(n, matched_m, seed)
        rows.append(_mar_vs_er_row(f"er-{seed}", "er", g, d, table))
    return MAR_VS_ER_SCHEMA, MAR_VS_ER_COLUMNS, rows


def _mar_vs_er_row(graph_id: str, family: str, g: Graph, d: int, table: CtmTable):
    return {
        "graph_id": graph_id,
        "family": family,
        "n": g.n,
        "m": g.edge_count,
        "bdm": bdm(g, d, table).raw,
        "nbdm": nbdm(g, d, table).normalized,
        "adjacency_entropy": entropy.adjacency_entropy(g),
        "degree_sequence": " ".join(str(x) for x in sorted(g.degrees().tolist())),
    }


def measure_graph(
    graph_id: str,
    generator: str,
    seed: int | None,
    g: Graph,
    d: int,
    table: CtmTable,
    labellings: int = 20,
    entropy_seed: int = 0,
    with_deficiency: bool = False,
):
    from .marpa import randomness_deficiency
    from .records import ExperimentRecord

    report = entropy.entropy_report(g, d, labellings, entropy_seed)
    sig = dynamics.signature(g, "edges", d, table) if g.edge_count else \
        dynamics.Signature((), d, table.table_id)
    deficiency = None
    if with_deficiency:
        deficiency = randomness_deficiency(g, d, table).bits
    return ExperimentRecord(
        graph_id=graph_id,
        generator=generator,
        seed=seed,
        n=g.n,
        m=g.edge_count,
        adjacency_entropy=report.adjacency,
        degree_entropy=report.degree,
        block_entropy=report.block,
        bdm=bdm(g, d, table).raw,
        nbdm=nbdm(g, d, table).normalized,
        p_r=dynamics.relative_programmability(sig),
        p_a=dynamics.absolute_programmability(sig),
        deficiency=deficiency,
    )
