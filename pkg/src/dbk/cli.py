"""Command-line interface: generate corpora, solve single graphs, run
experiment sweeps, and recompute TTS tables from stored run records.

Exit codes: 0 success, 1 usage/input error, 3 solution failed exact
verification (--verify).
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys

from . import __version__
from .anneal import SamplerSettings
from .backends import BACKEND_NAMES, make_backend
from .engine import DbkConfig, dbk_solve
from .exact import max_clique_exact
from .experiment import (
    ExperimentConfig,
    assemble_tables,
    generate_corpus,
    run_experiment,
)
from .graph import is_clique, load_graph
from .metrics import tts_fixed, tts_opt, write_summary_csv
from .seeds import derive_seed

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VERIFY_FAILED = 3


def _add_sampler_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--reads", type=int, default=1000, help="samples per backend call")
    p.add_argument("--sweeps", type=int, default=1000, help="annealing sweeps per read")
    p.add_argument("--beta-min", type=float, default=0.1)
    p.add_argument("--beta-max", type=float, default=10.0)
    p.add_argument("--prefactor", type=float, default=0.2, help="chain strength prefactor")
    p.add_argument("--hardware-m", type=int, default=16, help="Chimera grid parameter")


def _sampler_from_args(args) -> SamplerSettings:
    return SamplerSettings(
        num_reads=args.reads,
        sweeps=args.sweeps,
        beta_min=args.beta_min,
        beta_max=args.beta_max,
        chain_strength_prefactor=args.prefactor,
        hardware_m=args.hardware_m,
        seed=args.seed,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dbk",
        description="Maximum clique via graph decomposition with exact or "
        "emulated-annealer subsolvers.",
    )
    parser.add_argument("--version", action="version", version=f"dbk {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a seeded random-graph corpus")
    g.add_argument("--count", type=int, default=20)
    g.add_argument("--n", type=int, default=40)
    g.add_argument("--density-min", type=float, default=0.1)
    g.add_argument("--density-max", type=float, default=0.9)
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--out", required=True, help="corpus output directory")
    g.add_argument(
        "--allow-disconnected",
        action="store_true",
        help="skip the connectivity requirement",
    )

    s = sub.add_parser("solve", help="solve one graph file")
    s.add_argument("graph", help="DIMACS or JSON graph file")
    s.add_argument("--backend", choices=BACKEND_NAMES, default="exact")
    s.add_argument("--cutoff", type=int, default=None, help="decomposition cutoff L")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", default=None, help="write the result JSON here")
    s.add_argument("--trace", default=None, help="write a JSONL decomposition trace here")
    s.add_argument(
        "--verify",
        action="store_true",
        help="check the result against the exact solver; exit 3 on mismatch",
    )
    _add_sampler_flags(s)

    e = sub.add_parser("experiment", help="run a graph x cutoff x repetition sweep")
    e.add_argument("--config", default=None, help="JSON experiment config file")
    e.add_argument("--out", default=None, help="output directory (overrides config)")
    e.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    e.add_argument("--count", type=int, default=20)
    e.add_argument("--n", type=int, default=40)
    e.add_argument("--density-min", type=float, default=0.1)
    e.add_argument("--density-max", type=float, default=0.9)
    e.add_argument("--seed", type=int, default=1)
    e.add_argument("--cutoffs", default="36,30,24,18,12", help="comma-separated cutoffs")
    e.add_argument("--backend", choices=BACKEND_NAMES, default="sa")
    e.add_argument("--reps", type=int, default=1)
    _add_sampler_flags(e)

    t = sub.add_parser("tts", help="recompute TTS tables from a finished run directory")
    t.add_argument("run_dir")
    t.add_argument("--out", default=None, help="output CSV path (default: stdout)")

    return parser


def cmd_generate(args) -> int:
    manifest = generate_corpus(
        args.count,
        args.n,
        args.density_min,
        args.density_max,
        args.seed,
        args.out,
        require_connected=not args.allow_disconnected,
    )
    print(f"wrote {len(manifest['graphs'])} graphs to {args.out}")
    return EXIT_OK


def cmd_solve(args) -> int:
    g = load_graph(args.graph)
    cutoff = args.cutoff
    if cutoff is None:
        cutoff = g.n if args.backend == "exact" else min(g.n, 4 * args.hardware_m)
    cutoff = max(cutoff, 1)
    settings = _sampler_from_args(args)
    backend = make_backend(args.backend, cutoff, settings)
    cfg = DbkConfig(cutoff=cutoff, subsolver=backend, record_trace=args.trace is not None)
    result = dbk_solve(g, cfg)

    out = {
        "graph": args.graph,
        "backend": args.backend,
        "cutoff": cutoff,
        "size": result.size,
        "clique": sorted(result.clique),
        "valid": is_clique(g, result.clique),
        "subgraph_count": result.subgraph_count,
        "dbk_proc_time": result.dbk_proc_time,
        "subsolver_time": result.subsolver_time,
        "t_qpu_total": backend.t_qpu_total,
        "t_classical_total": backend.t_classical_total,
        "tts_opt": tts_opt(result.dbk_proc_time, backend.records),
        "records": [r.to_json_dict() for r in backend.records],
        "settings": settings.to_json_dict(),
    }
    if args.verify:
        exact_size = max_clique_exact(g).size
        out["exact_size"] = exact_size
        out["verified"] = result.size == exact_size

    if args.trace:
        with open(args.trace, "w") as fh:
            for rec in result.trace:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
    text = json.dumps(out, indent=1, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)

    if args.verify and not out["verified"]:
        print(
            f"verification FAILED: found {result.size}, exact {out['exact_size']}",
            file=sys.stderr,
        )
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_experiment(args) -> int:
    if args.config:
        with open(args.config) as fh:
            config = ExperimentConfig.from_json_dict(json.load(fh))
    else:
        config = ExperimentConfig(
            count=args.count,
            n=args.n,
            density_min=args.density_min,
            density_max=args.density_max,
            base_seed=args.seed,
            cutoffs=tuple(int(c) for c in args.cutoffs.split(",")),
            backend=args.backend,
            sampler=_sampler_from_args(args),
            repetitions=args.reps,
            out_dir=args.out or "runs/experiment",
        )
    if args.out:
        config.out_dir = args.out
    out_dir = run_experiment(config, jobs=args.jobs)
    print(f"experiment complete: {os.path.join(out_dir, 'summary.csv')}")
    return EXIT_OK


def cmd_tts(args) -> int:
    """Recompute TTS_opt per cell and TTS_fixed per (graph, cutoff) from
    the per-subgraph records stored with each cell."""
    run_dir = args.run_dir
    cells_dir = os.path.join(run_dir, "cells")
    if not os.path.isdir(cells_dir):
        print(f"no cells directory under {run_dir}", file=sys.stderr)
        return EXIT_ERROR
    from .metrics import SubgraphRunRecord

    cells = []
    for name in sorted(os.listdir(cells_dir)):
        if name.endswith(".json"):
            with open(os.path.join(cells_dir, name)) as fh:
                cells.append(json.load(fh))

    groups: dict[tuple[str, int], list[dict]] = {}
    for cell in cells:
        groups.setdefault((cell["graph"], cell["cutoff"]), []).append(cell)

    rows = []
    for (gid, cutoff), group in sorted(groups.items(), key=lambda kv: (kv[0][0], -kv[0][1])):
        p = sum(1 for c in group if c["success"]) / len(group)
        mean_qpu = sum(c["t_qpu_total"] for c in group) / len(group)
        mean_classical = sum(c["t_classical_total"] for c in group) / len(group)
        for cell in group:
            recs = [SubgraphRunRecord.from_json_dict(r) for r in cell["records"]]
            report = tts_report(cell["dbk_proc_time"], recs, p, mean_qpu, mean_classical)
            rows.append(
                {
                    "graph": gid,
                    "density": cell["density"],
                    "cutoff": cutoff,
                    "rep": cell["rep"],
                    "subgraph_count": cell["subgraph_count"],
                    "mean_subgraph_density": cell["mean_subgraph_density"],
                    "mean_subgraph_size": cell["mean_subgraph_size"],
                    "found_size": cell["found_size"],
                    "exact_size": cell["exact_size"],
                    "success": cell["success"],
                    "failure": cell["failure"],
                    "tts_opt": report.tts_opt,
                    "tts_fixed": report.tts_fixed,
                    "wall_time": None,
                }
            )
    if args.out:
        write_summary_csv(args.out, rows)
        print(f"wrote {args.out}")
    else:
        for row in rows:
            print(json.dumps(row, sort_keys=True))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "solve":
            return cmd_solve(args)
        if args.command == "experiment":
            return cmd_experiment(args)
        if args.command == "tts":
            return cmd_tts(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
