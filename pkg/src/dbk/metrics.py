"""Time-to-solution, ground-state probability, failure-rate, and
approximation-ratio computations for probabilistic subsolver runs.

TTS is the expected time to reach an optimum with 99% confidence. When a
subsolver never found a subgraph's optimum (p = 0) the TTS is undefined;
undefined values are propagated as None (never infinity) so that report
tables show gaps rather than fake numbers.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .engine import DbkResult

GSP_HISTOGRAM_BINS = 10


@dataclass(frozen=True)
class SubgraphRunRecord:
    """Per-subgraph sampling outcome feeding the TTS formulas.

    ``hits`` counts reads in which a maximum clique of the subgraph was
    found at least once across the parallel replicas.
    """

    reads: int  # A: samples per backend call
    t_qpu: float
    t_unembed: float
    hits: int
    ground_truth_size: int
    size: int = 0  # subgraph vertex count (for summaries)
    density: float = 0.0
    best_found_size: int = 0

    def __post_init__(self):
        if self.reads < 1:
            raise ValueError("reads must be >= 1")
        if not 0 <= self.hits <= self.reads:
            raise ValueError(f"hits must lie in [0, reads], got {self.hits}/{self.reads}")

    def to_json_dict(self) -> dict:
        return {
            "reads": self.reads,
            "t_qpu": self.t_qpu,
            "t_unembed": self.t_unembed,
            "hits": self.hits,
            "ground_truth_size": self.ground_truth_size,
            "size": self.size,
            "density": self.density,
            "best_found_size": self.best_found_size,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SubgraphRunRecord":
        return cls(**data)


@dataclass(frozen=True)
class TtsReport:
    """Both TTS readings for one run; None marks an undefined value (some
    subgraph, or the whole run, never succeeded)."""

    tts_opt: float | None
    tts_fixed: float | None
    gsp_values: tuple[float, ...]


def tts_report(
    dbk_proc_time: float,
    recs: Sequence[SubgraphRunRecord],
    p: float,
    t_qpu: float,
    t_classical: float,
) -> TtsReport:
    return TtsReport(
        tts_opt=tts_opt(dbk_proc_time, recs),
        tts_fixed=tts_fixed(p, t_qpu, t_classical),
        gsp_values=tuple(gsp(r) for r in recs),
    )


def gsp(rec: SubgraphRunRecord) -> float:
    """Ground-state probability: fraction of reads that found an optimum."""
    return rec.hits / rec.reads


def tts_opt(
    dbk_proc_time: float,
    recs: Iterable[SubgraphRunRecord],
    confidence: float = 0.99,
) -> float | None:
    """Decomposition time plus per-subgraph repeat-to-confidence sampling time.

    Each subgraph contributes (T_qpu + T_unembed)/A scaled by the number of
    runs needed to reach the confidence level, log(1-confidence)/log(1-p).
    A subgraph with p = 1 contributes a single run; any subgraph with p = 0
    makes the whole quantity undefined (None). Minor-embedding time is zero
    by construction (the embeddings are fixed and precomputed).
    """
    total = dbk_proc_time
    for rec in recs:
        p = gsp(rec)
        if p == 0.0:
            return None
        per_run = (rec.t_qpu + rec.t_unembed) / rec.reads
        total += per_run * _runs_to_confidence(p, confidence)
    return total


def _runs_to_confidence(p: float, confidence: float) -> float:
    """Expected runs of a p-success trial to reach the confidence level.

    At least one run is always needed, which also makes the p -> 1 limit
    agree with the p = 1 single-run rule.
    """
    if p >= 1.0:
        return 1.0
    return max(1.0, math.log(1.0 - confidence) / math.log(1.0 - p))


def tts_fixed(
    p: float,
    t_qpu: float,
    t_classical: float,
    confidence: float = 0.99,
) -> float | None:
    """Fixed-sample-count TTS: (T_qpu + T_classical) scaled to the confidence.

    p is the whole-run success rate. p = 1 collapses to T_qpu + T_classical;
    p = 0 is undefined (None).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if p == 0.0:
        return None
    return (t_qpu + t_classical) * _runs_to_confidence(p, confidence)


def gsp_histogram(values: Sequence[float], bins: int = GSP_HISTOGRAM_BINS) -> tuple[int, ...]:
    """Counts of GSP values over equal-width bins on [0, 1]; 1.0 lands in the last bin."""
    counts = [0] * bins
    for v in values:
        idx = min(int(v * bins), bins - 1)
        counts[idx] += 1
    return tuple(counts)


@dataclass(frozen=True)
class RunSummary:
    """Per-run measured quantities: decomposition shape, solution quality,
    and subsolver reliability."""

    found_size: int
    ground_truth_size: int
    success: bool
    subgraph_count: int
    mean_subgraph_density: float
    mean_subgraph_size: float
    approximation_ratios: tuple[float, ...]
    failure: bool
    gsp_values: tuple[float, ...]
    gsp_bins: tuple[int, ...]


def summarize_run(
    dbk: DbkResult,
    recs: Sequence[SubgraphRunRecord],
    ground_truth_size: int,
) -> RunSummary:
    """Aggregate one DBK run against exact ground truth.

    The failure indicator is True when any solver-called subgraph was never
    solved to optimality (hits = 0). A run whose decomposition needed no
    subsolver calls has an empty ratio list and failure False.
    """
    ratios = tuple(r.best_found_size / r.ground_truth_size for r in recs if r.ground_truth_size)
    gsps = tuple(gsp(r) for r in recs)
    count = len(recs)
    return RunSummary(
        found_size=dbk.size,
        ground_truth_size=ground_truth_size,
        success=dbk.size == ground_truth_size,
        subgraph_count=count,
        mean_subgraph_density=sum(r.density for r in recs) / count if count else 0.0,
        mean_subgraph_size=sum(r.size for r in recs) / count if count else 0.0,
        approximation_ratios=ratios,
        failure=any(r.hits == 0 for r in recs),
        gsp_values=gsps,
        gsp_bins=gsp_histogram(gsps),
    )


SUMMARY_COLUMNS = [
    "graph",
    "density",
    "cutoff",
    "rep",
    "subgraph_count",
    "mean_subgraph_density",
    "mean_subgraph_size",
    "found_size",
    "exact_size",
    "success",
    "failure",
    "tts_opt",
    "tts_fixed",
    "wall_time",
]

GSP_HISTOGRAM_COLUMNS = ["cutoff", "bin_start", "bin_end", "count"]


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_summary_csv(path: str, rows: Iterable[dict]) -> None:
    """Plot-ready per-run table; undefined TTS values are left empty."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SUMMARY_COLUMNS)
        for row in rows:
            writer.writerow([_cell(row.get(col)) for col in SUMMARY_COLUMNS])


def write_gsp_histogram_csv(path: str, per_cutoff: dict[int, Sequence[float]]) -> None:
    """GSP histogram per cutoff: one row per (cutoff, bin)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(GSP_HISTOGRAM_COLUMNS)
        for cutoff in sorted(per_cutoff, reverse=True):
            counts = gsp_histogram(per_cutoff[cutoff])
            for i, count in enumerate(counts):
                writer.writerow(
                    [
                        cutoff,
                        _cell(i / GSP_HISTOGRAM_BINS),
                        _cell((i + 1) / GSP_HISTOGRAM_BINS),
                        count,
                    ]
                )
