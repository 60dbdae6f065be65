"""Command-line harness.

Exit codes: 0 success, 2 usage errors (argparse), 3 missing dependency file
(e.g. the CTM table), 4 malformed input (graph files, table files).
"""

from __future__ import annotations

import argparse
import sys

from . import ctm as _ctm
from . import dynamics, experiments, records
from .graphs import (
    Graph,
    GraphParseError,
    complete_graph,
    cycle_graph,
    empty_graph,
    erdos_renyi,
    erdos_renyi_gnm,
    load_graph,
    rado_graph,
    star_graph,
)
from .machines import machine_space_size
from .marpa import MarConfig, marpa_run, trajectory_to_json

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISSING_DEP = 3
EXIT_MALFORMED = 4


class CliInputError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def parse_gen(spec: str) -> tuple[str, int | None, Graph]:
    """Parse KIND:ARGS generator specs like er:16:0.5:7 or complete:8.

    Returns (label, seed, graph).
    """
    parts = spec.split(":")
    kind = parts[0]
    try:
        if kind in ("complete", "empty", "cycle", "star", "rado") and len(parts) == 2:
            n = int(parts[1])
            g = {
                "complete": complete_graph,
                "empty": empty_graph,
                "cycle": cycle_graph,
                "star": star_graph,
                "rado": rado_graph,
            }[kind](n)
            return spec, None, g
        if kind == "er" and len(parts) == 4:
            n, p, seed = int(parts[1]), float(parts[2]), int(parts[3])
            return spec, seed, erdos_renyi(n, p, seed)
        if kind == "gnm" and len(parts) == 4:
            n, m, seed = int(parts[1]), int(parts[2]), int(parts[3])
            return spec, seed, erdos_renyi_gnm(n, m, seed)
    except ValueError as exc:
        raise CliInputError(f"bad generator spec {spec!r}: {exc}", EXIT_MALFORMED)
    raise CliInputError(f"unknown generator spec {spec!r}", EXIT_MALFORMED)


def _load_table(path: str | None) -> _ctm.CtmTable:
    if path is None:
        return _ctm.default_table()
    try:
        return _ctm.load_table(path)
    except FileNotFoundError:
        raise CliInputError(f"table file not found: {path}", EXIT_MISSING_DEP)
    except _ctm.TableError as exc:
        raise CliInputError(f"bad table file {path}: {exc}", EXIT_MALFORMED)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)


def _gather_graphs(args) -> list[tuple[str, int | None, Graph]]:
    items = []
    for spec in args.gen or []:
        items.append(parse_gen(spec))
    for path in args.files or []:
        try:
            items.append((path, None, load_graph(path)))
        except FileNotFoundError:
            raise CliInputError(f"graph file not found: {path}", EXIT_MISSING_DEP)
        except GraphParseError as exc:
            raise CliInputError(f"{path}: {exc}", EXIT_MALFORMED)
    if not items:
        raise CliInputError("no graphs given (use --gen or files)", EXIT_USAGE)
    return items


def cmd_ctm_build(args) -> int:
    # an explicitly requested state count is its own authorisation
    table = _ctm.build_ctm_table(
        states=args.states,
        step_bound=args.steps,
        d=args.d,
        max_states=args.states,
        backend=args.backend,
        partitions=args.partitions,
    )
    _ctm.save_table(table, args.out)
    space = machine_space_size(args.states)
    print(
        f"wrote {args.out}: {len(table.entries)} entries, "
        f"halting fraction {table.halted}/{space} = {table.halted / space:.6f}"
    )
    return EXIT_OK


def cmd_measure(args) -> int:
    table = _load_table(args.table)
    rows = []
    for graph_id, seed, g in _gather_graphs(args):
        rows.append(
            experiments.measure_graph(
                graph_id,
                graph_id.split(":")[0],
                seed,
                g,
                args.d,
                table,
                labellings=args.labellings,
                entropy_seed=args.seed,
                with_deficiency=args.deficiency,
            )
        )
    if args.format == "csv":
        _emit(records.records_to_csv(rows), args.out)
    else:
        _emit(records.records_to_json(rows), args.out)
    return EXIT_OK


def cmd_experiment(args) -> int:
    table = _load_table(args.table)
    if args.name == "asymmetry":
        schema, columns, rows = experiments.asymmetry_dataset(
            table, args.d, seeds=args.seeds
        )
    elif args.name == "growth-curve":
        schema, columns, rows = experiments.growth_dataset(table, args.d, seed=args.seed)
    else:  # mar-vs-er
        schema, columns, rows = experiments.mar_vs_er_dataset(
            table, args.d, n=args.n, ensemble=args.ensemble
        )
    if args.format == "csv":
        _emit(records.rows_to_csv(schema, columns, rows), args.out)
    else:
        _emit(records.rows_to_json(schema, rows), args.out)
    return EXIT_OK


def cmd_signature(args) -> int:
    table = _load_table(args.table)
    items = _gather_graphs(args)
    if len(items) != 1:
        raise CliInputError("signature takes exactly one graph", EXIT_USAGE)
    _, _, g = items[0]
    sig = dynamics.signature(g, args.kind, args.d, table)
    _emit(dynamics.signature_to_csv(sig), args.out)
    return EXIT_OK


def cmd_mar(args) -> int:
    table = _load_table(args.table)
    config = MarConfig(
        nodes=args.n,
        table=table,
        target_edges=args.target_edges,
        d=args.d,
        tie_rotation=args.rotation,
        seed=args.seed,
    )
    traj = marpa_run(config, args.mode)
    _emit(trajectory_to_json(traj), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="marnet",
        description="Graph algorithmic-complexity toolkit: CTM tables, BDM, "
        "perturbation signatures, and MAR graph generation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ctm_p = sub.add_parser("ctm", help="CTM table operations")
    ctm_sub = ctm_p.add_subparsers(dest="ctm_command", required=True)
    build_p = ctm_sub.add_parser("build", help="enumerate a machine space")
    build_p.add_argument("--states", type=int, required=True)
    build_p.add_argument("--steps", type=int, required=True)
    build_p.add_argument("--d", type=int, required=True)
    build_p.add_argument("--out", required=True)
    build_p.add_argument("--backend", choices=("numba", "numpy"), default=None)
    build_p.add_argument("--partitions", type=int, default=1)
    build_p.set_defaults(func=cmd_ctm_build)

    def add_common(p, with_gen=True):
        p.add_argument("--table", default=None, help="CTM table file (default: shipped table)")
        p.add_argument("--d", type=int, default=2)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        if with_gen:
            p.add_argument("--gen", action="append", help="generator spec KIND:ARGS")
            p.add_argument("files", nargs="*", help="edge-list graph files")

    measure_p = sub.add_parser("measure", help="entropy/BDM/index rows per graph")
    add_common(measure_p)
    measure_p.add_argument("--labellings", type=int, default=20)
    measure_p.add_argument("--deficiency", action="store_true")
    measure_p.set_defaults(func=cmd_measure)

    exp_p = sub.add_parser("experiment", help="canned experiment datasets")
    exp_p.add_argument("name", choices=("asymmetry", "mar-vs-er", "growth-curve"))
    add_common(exp_p, with_gen=False)
    exp_p.add_argument("--n", type=int, default=8)
    exp_p.add_argument("--ensemble", type=int, default=5)
    exp_p.add_argument("--seeds", type=int, default=10)
    exp_p.set_defaults(func=cmd_experiment)

    sig_p = sub.add_parser("signature", help="per-element contribution CSV")
    add_common(sig_p)
    sig_p.add_argument("--kind", choices=("edges", "nodes", "both"), default="edges")
    sig_p.set_defaults(func=cmd_signature)

    mar_p = sub.add_parser("mar", help="greedy algorithmic randomisation run")
    mar_p.add_argument("--table", default=None)
    mar_p.add_argument("--d", type=int, default=2)
    mar_p.add_argument("--n", type=int, required=True)
    mar_p.add_argument("--mode", choices=("bottomup", "topdown"), default="bottomup")
    mar_p.add_argument("--target-edges", type=int, default=None)
    mar_p.add_argument("--rotation", type=int, default=0)
    mar_p.add_argument("--seed", type=int, default=None)
    mar_p.add_argument("--out", default=None)
    mar_p.set_defaults(func=cmd_mar)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliInputError as exc:
        print(f"marnet: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, _ctm.TableError) as exc:
        print(f"marnet: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
