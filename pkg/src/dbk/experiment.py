"""Experiment harness: corpus generation, decomposition sweeps over graph x
cutoff x repetition grids, and CSV aggregation.

Every stochastic stage derives its seed from the base seed and the cell's
identity (graph, cutoff, repetition), never from execution order, so sweeps
are resumable and bit-reproducible: rerunning with the same configuration
regenerates identical corpora, identical per-cell results, and identical
tables, up to wall-clock measurement columns.
"""

from __future__ import annotations

import json
import logging
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from . import __version__
from .anneal import MAPPING_OVERHEAD_S, SamplerSettings
from .backends import BACKEND_NAMES, make_backend
from .engine import DbkConfig, dbk_solve
from .exact import max_clique_exact
from .graph import Graph, generate_er, is_clique, load_graph, save_graph
from .metrics import (
    summarize_run,
    tts_fixed,
    tts_opt,
    write_gsp_histogram_csv,
    write_summary_csv,
)
from .seeds import derive_seed

logger = logging.getLogger(__name__)


@dataclass
class ExperimentConfig:
    """Full sweep description; JSON-serializable and hashable into seeds."""

    count: int = 20
    n: int = 40
    density_min: float = 0.1
    density_max: float = 0.9
    base_seed: int = 1
    cutoffs: tuple[int, ...] = (36, 30, 24, 18, 12)
    backend: str = "sa"
    sampler: SamplerSettings = field(default_factory=SamplerSettings)
    repetitions: int = 1
    out_dir: str = "runs/experiment"
    require_connected: bool = True

    def __post_init__(self):
        self.cutoffs = tuple(sorted(set(int(c) for c in self.cutoffs), reverse=True))
        if not self.cutoffs:
            raise ValueError("at least one cutoff is required")
        if self.backend not in BACKEND_NAMES:
            raise ValueError(f"backend must be one of {BACKEND_NAMES}")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")

    def to_json_dict(self) -> dict:
        return {
            "count": self.count,
            "n": self.n,
            "density_min": self.density_min,
            "density_max": self.density_max,
            "base_seed": self.base_seed,
            "cutoffs": list(self.cutoffs),
            "backend": self.backend,
            "sampler": self.sampler.to_json_dict(),
            "repetitions": self.repetitions,
            "out_dir": self.out_dir,
            "require_connected": self.require_connected,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExperimentConfig":
        data = dict(data)
        data["cutoffs"] = tuple(data.get("cutoffs", ()))
        data["sampler"] = SamplerSettings.from_json_dict(data.get("sampler", {}))
        return cls(**data)


def generate_corpus(
    count: int,
    n: int,
    density_min: float,
    density_max: float,
    base_seed: int,
    out_dir: str,
    require_connected: bool = True,
) -> dict:
    """Write ``count`` seeded random graphs plus a manifest; deterministic.

    Per-graph densities are drawn uniformly from [density_min, density_max]
    and per-graph seeds from a generator seeded with the base seed, so the
    corpus is a pure function of its parameters.
    """
    if not 0.0 <= density_min <= density_max <= 1.0:
        raise ValueError("need 0 <= density_min <= density_max <= 1")
    os.makedirs(out_dir, exist_ok=True)
    rng = random.Random(base_seed)
    entries = []
    for i in range(count):
        density = rng.uniform(density_min, density_max)
        seed = rng.randrange(2**31)
        g = generate_er(n, density, seed, require_connected=require_connected)
        gid = f"g{i:03d}"
        filename = f"{gid}.dimacs"
        save_graph(g, os.path.join(out_dir, filename))
        entries.append(
            {
                "id": gid,
                "file": filename,
                "n": n,
                "seed": seed,
                "density_param": density,
                "density": g.density,
                "edge_count": g.num_edges,
            }
        )
    manifest = {
        "tool": "dbk",
        "version": __version__,
        "count": count,
        "n": n,
        "density_min": density_min,
        "density_max": density_max,
        "base_seed": base_seed,
        "require_connected": require_connected,
        "graphs": entries,
    }
    with open(os.path.join(out_dir, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, sort_keys=True, indent=1)
        fh.write("\n")
    return manifest


def run_cell(
    graph: Graph,
    gid: str,
    cutoff: int,
    rep: int,
    backend_name: str,
    sampler: SamplerSettings,
    base_seed: int,
) -> dict:
    """Execute one (graph, cutoff, repetition) cell and score it."""
    cell_seed = derive_seed(base_seed, gid, cutoff, rep)
    settings = replace(sampler, seed=cell_seed)
    backend = make_backend(backend_name, cutoff, settings)
    result = dbk_solve(graph, DbkConfig(cutoff=cutoff, subsolver=backend))
    exact_size = max_clique_exact(graph).size
    if not is_clique(graph, result.clique):
        raise AssertionError(f"cell {gid}/{cutoff}/{rep} produced an invalid clique")
    summary = summarize_run(result, backend.records, exact_size)
    t_opt = tts_opt(result.dbk_proc_time, backend.records)
    return {
        "graph": gid,
        "n": graph.n,
        "density": graph.density,
        "cutoff": cutoff,
        "rep": rep,
        "backend": backend_name,
        "seed": cell_seed,
        "clique": sorted(result.clique),
        "found_size": result.size,
        "exact_size": exact_size,
        "success": summary.success,
        "subgraph_count": summary.subgraph_count,
        "mean_subgraph_density": summary.mean_subgraph_density,
        "mean_subgraph_size": summary.mean_subgraph_size,
        "approximation_ratios": list(summary.approximation_ratios),
        "failure": summary.failure,
        "gsp_values": list(summary.gsp_values),
        "records": [r.to_json_dict() for r in backend.records],
        "dbk_proc_time": result.dbk_proc_time,
        "subsolver_time": result.subsolver_time,
        "t_qpu_total": backend.t_qpu_total,
        "t_classical_total": backend.t_classical_total,
        "tts_opt": t_opt,
    }


def _cell_key(gid: str, cutoff: int, rep: int) -> str:
    return f"{gid}:c{cutoff}:r{rep}"


def _cell_filename(gid: str, cutoff: int, rep: int) -> str:
    return f"{gid}_c{cutoff}_r{rep}.json"


def _run_cell_job(args: tuple) -> tuple[str, str | None]:
    """Worker entry point: run one cell and persist it; returns (key, error)."""
    config_dict, entry, cutoff, rep, cells_dir, corpus_dir = args
    config = ExperimentConfig.from_json_dict(config_dict)
    key = _cell_key(entry["id"], cutoff, rep)
    try:
        graph = load_graph(os.path.join(corpus_dir, entry["file"]))
        cell = run_cell(
            graph,
            entry["id"],
            cutoff,
            rep,
            config.backend,
            config.sampler,
            config.base_seed,
        )
        path = os.path.join(cells_dir, _cell_filename(entry["id"], cutoff, rep))
        with open(path, "w") as fh:
            json.dump(cell, fh, sort_keys=True)
            fh.write("\n")
        return key, None
    except Exception as exc:  # a failed cell must not abort the sweep
        return key, f"{type(exc).__name__}: {exc}"


def assemble_tables(out_dir: str, config: ExperimentConfig) -> tuple[str, str]:
    """Build summary.csv and gsp_histogram.csv from whatever cells exist."""
    corpus_dir = os.path.join(out_dir, "corpus")
    cells_dir = os.path.join(out_dir, "cells")
    with open(os.path.join(corpus_dir, "manifest.json")) as fh:
        corpus = json.load(fh)

    cells: dict[tuple[str, int, int], dict] = {}
    for entry in corpus["graphs"]:
        for cutoff in config.cutoffs:
            for rep in range(config.repetitions):
                path = os.path.join(cells_dir, _cell_filename(entry["id"], cutoff, rep))
                if os.path.exists(path):
                    with open(path) as fh:
                        cells[(entry["id"], cutoff, rep)] = json.load(fh)

    # TTS_fixed is a per-(graph, cutoff) quantity: success rate over the
    # repetitions against the mean per-run QPU + classical time
    fixed: dict[tuple[str, int], float | None] = {}
    for entry in corpus["graphs"]:
        for cutoff in config.cutoffs:
            reps = [
                cells[(entry["id"], cutoff, r)]
                for r in range(config.repetitions)
                if (entry["id"], cutoff, r) in cells
            ]
            if not reps:
                continue
            p = sum(1 for c in reps if c["success"]) / len(reps)
            mean_qpu = sum(c["t_qpu_total"] for c in reps) / len(reps)
            mean_classical = sum(c["t_classical_total"] for c in reps) / len(reps)
            fixed[(entry["id"], cutoff)] = tts_fixed(p, mean_qpu, mean_classical)

    rows = []
    gsp_per_cutoff: dict[int, list[float]] = {c: [] for c in config.cutoffs}
    for entry in corpus["graphs"]:
        for cutoff in config.cutoffs:
            for rep in range(config.repetitions):
                cell = cells.get((entry["id"], cutoff, rep))
                if cell is None:
                    continue
                gsp_per_cutoff[cutoff].extend(cell["gsp_values"])
                rows.append(
                    {
                        "graph": cell["graph"],
                        "density": cell["density"],
                        "cutoff": cutoff,
                        "rep": rep,
                        "subgraph_count": cell["subgraph_count"],
                        "mean_subgraph_density": cell["mean_subgraph_density"],
                        "mean_subgraph_size": cell["mean_subgraph_size"],
                        "found_size": cell["found_size"],
                        "exact_size": cell["exact_size"],
                        "success": cell["success"],
                        "failure": cell["failure"],
                        "tts_opt": cell["tts_opt"],
                        "tts_fixed": fixed.get((cell["graph"], cutoff)),
                        "wall_time": cell["dbk_proc_time"] + cell["subsolver_time"],
                    }
                )

    summary_path = os.path.join(out_dir, "summary.csv")
    hist_path = os.path.join(out_dir, "gsp_histogram.csv")
    write_summary_csv(summary_path, rows)
    write_gsp_histogram_csv(hist_path, gsp_per_cutoff)
    return summary_path, hist_path


def run_experiment(config: ExperimentConfig, jobs: int = 1) -> str:
    """Run (or resume) the full sweep; returns the output directory.

    Completed cells recorded in progress.json are skipped, so an interrupted
    sweep picks up where it stopped and still produces identical tables.
    Failed cells are logged to errors.log and skipped, never fatal.
    """
    out_dir = config.out_dir
    os.makedirs(out_dir, exist_ok=True)
    corpus_dir = os.path.join(out_dir, "corpus")
    cells_dir = os.path.join(out_dir, "cells")
    os.makedirs(cells_dir, exist_ok=True)

    with open(os.path.join(out_dir, "manifest.json"), "w") as fh:
        json.dump(
            {"tool": "dbk", "version": __version__, "config": config.to_json_dict()},
            fh,
            sort_keys=True,
            indent=1,
        )
        fh.write("\n")

    if not os.path.exists(os.path.join(corpus_dir, "manifest.json")):
        generate_corpus(
            config.count,
            config.n,
            config.density_min,
            config.density_max,
            config.base_seed,
            corpus_dir,
            require_connected=config.require_connected,
        )
    with open(os.path.join(corpus_dir, "manifest.json")) as fh:
        corpus = json.load(fh)

    progress_path = os.path.join(out_dir, "progress.json")
    completed: set[str] = set()
    if os.path.exists(progress_path):
        with open(progress_path) as fh:
            completed = set(json.load(fh)["completed"])

    pending = []
    for entry in corpus["graphs"]:
        for cutoff in config.cutoffs:
            for rep in range(config.repetitions):
                key = _cell_key(entry["id"], cutoff, rep)
                cell_file = os.path.join(cells_dir, _cell_filename(entry["id"], cutoff, rep))
                if key in completed and os.path.exists(cell_file):
                    continue
                pending.append((config.to_json_dict(), entry, cutoff, rep, cells_dir, corpus_dir))

    def record(key: str, error: str | None) -> None:
        if error is None:
            completed.add(key)
            with open(progress_path, "w") as fh:
                json.dump({"completed": sorted(completed)}, fh)
                fh.write("\n")
        else:
            logger.error("cell %s failed: %s", key, error)
            with open(os.path.join(out_dir, "errors.log"), "a") as fh:
                fh.write(f"{key}\t{error}\n")

    if jobs > 1 and pending:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for key, error in pool.map(_run_cell_job, pending):
                record(key, error)
    else:
        for job in pending:
            record(*_run_cell_job(job))

    assemble_tables(out_dir, config)
    return out_dir
