"""End-to-end emulated backend call: embed, sample, decode, repair.

``parallel_solve`` runs the whole chain for one QUBO on a parallel layout:
chain strength, physical Ising construction, seeded sampling, majority-vote
decoding of every replica, and clique repair of every decoded assignment.
Per read it keeps the best clique across replicas and, when a target size is
given, whether any replica attained it (the per-read ground-state indicator).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np

from ..graph import Graph
from ..qubo import Qubo, energy, extract_clique, qubo_to_ising
from ..seeds import derive_seed
from .embedding import EmbeddingError, ParallelLayout
from .physical import chain_strength_utc, embed_ising
from .sampler import (
    MAPPING_OVERHEAD_S,
    SamplerSettings,
    UNEMBED_CHAIN_READ_S,
    sa_sample,
)
from .unembed import batch_majority_vote


@dataclass(frozen=True)
class ReadRecord:
    """Best-across-replicas outcome of a single read."""

    assignment: tuple[int, ...]  # binary values, in sorted-variable order
    clique: frozenset[int]
    size: int
    replica: int
    broken_chains: int  # across all replicas of this read
    energy: float
    hit: bool | None = None


@dataclass(eq=False)
class SampleSet:
    """Logical-level result of one backend call."""

    variables: tuple[int, ...]
    reads: list[ReadRecord]
    num_replicas: int
    t_qpu: float
    t_unembed: float
    t_mapping: float
    wall_time: float
    target_size: int | None = None
    chain_strength: float = 0.0
    settings: SamplerSettings | None = field(default=None, repr=False)

    @property
    def num_reads(self) -> int:
        return len(self.reads)

    @property
    def t_classical(self) -> float:
        return self.t_unembed + self.t_mapping

    def best(self) -> frozenset[int]:
        """Largest clique over all reads (earliest read wins ties)."""
        best = frozenset()
        for rec in self.reads:
            if rec.size > len(best):
                best = rec.clique
        return best

    def hits(self, target_size: int | None = None) -> int:
        """Number of reads whose best replica reached the target size."""
        target = self.target_size if target_size is None else target_size
        if target is None:
            raise ValueError("no target size given")
        return sum(1 for rec in self.reads if rec.size >= target)

    def mean_broken_chains(self) -> float:
        if not self.reads:
            return 0.0
        return sum(rec.broken_chains for rec in self.reads) / len(self.reads)

    def dump_jsonl(self, path: str) -> None:
        """One JSON record per read: assignment, clique, broken chains, replica."""
        with open(path, "w") as fh:
            for rec in self.reads:
                fh.write(
                    json.dumps(
                        {
                            "assignment": dict(zip(map(str, self.variables), rec.assignment)),
                            "clique": sorted(rec.clique),
                            "size": rec.size,
                            "replica": rec.replica,
                            "broken_chains": rec.broken_chains,
                            "energy": rec.energy,
                            "hit": rec.hit,
                        },
                        sort_keys=True,
                    )
                    + "\n"
                )


def parallel_solve(
    g: Graph,
    q: Qubo,
    layout: ParallelLayout,
    settings: SamplerSettings,
    target_size: int | None = None,
) -> SampleSet:
    """Solve one clique QUBO on every embedding of the layout simultaneously."""
    t0 = time.perf_counter()
    variables = tuple(sorted(g.vertices))
    for emb in layout.embeddings:
        if emb.size < len(variables):
            raise EmbeddingError(
                f"layout embeddings hold {emb.size} variables, problem has {len(variables)}"
            )

    strength = chain_strength_utc(q, settings.chain_strength_prefactor)
    phys = embed_ising(qubo_to_ising(q), layout, strength)
    pss = sa_sample(
        phys,
        num_reads=settings.num_reads,
        sweeps=settings.sweeps,
        beta_range=(settings.beta_min, settings.beta_max),
        seed=settings.seed,
    )

    pos = {qid: i for i, qid in enumerate(pss.qubit_order)}
    n_vars = len(variables)
    reads = settings.num_reads

    # decode every replica: (replicas, reads, n_vars) binary values
    decoded = np.empty((len(layout), reads, n_vars), dtype=np.int8)
    broken_total = np.zeros(reads, dtype=np.int64)
    for k, emb in enumerate(layout.embeddings):
        chain_columns = np.array(
            [[pos[qid] for qid in emb.chains[i].qubits] for i in range(n_vars)],
            dtype=np.int64,
        )
        read_seeds = np.array(
            [derive_seed(settings.seed, "unembed", r, k) for r in range(reads)],
            dtype=np.int64,
        )
        spins, broken = batch_majority_vote(pss.states, chain_columns, read_seeds)
        decoded[k] = (spins + 1) // 2
        broken_total += broken
    pss.broken_chain_counts = broken_total
    pss.t_unembed = reads * len(layout) * n_vars * UNEMBED_CHAIN_READ_S

    # repair each decoded assignment into a clique; identical assignments
    # across reads/replicas are repaired once
    cache: dict[bytes, tuple[frozenset[int], float]] = {}

    def repair(bits: np.ndarray) -> tuple[frozenset[int], float]:
        key = bits.tobytes()
        out = cache.get(key)
        if out is None:
            x = {v: int(bits[i]) for i, v in enumerate(variables)}
            out = (extract_clique(g, x), energy(q, x))
            cache[key] = out
        return out

    records: list[ReadRecord] = []
    for r in range(reads):
        best_clique, best_energy = repair(decoded[0, r])
        best_k = 0
        best_bits = decoded[0, r]
        for k in range(1, len(layout)):
            clique, e_val = repair(decoded[k, r])
            if len(clique) > len(best_clique):
                best_clique, best_energy, best_k, best_bits = clique, e_val, k, decoded[k, r]
        records.append(
            ReadRecord(
                assignment=tuple(int(b) for b in best_bits),
                clique=best_clique,
                size=len(best_clique),
                replica=best_k,
                broken_chains=int(broken_total[r]),
                energy=best_energy,
                hit=None if target_size is None else len(best_clique) >= target_size,
            )
        )

    return SampleSet(
        variables=variables,
        reads=records,
        num_replicas=len(layout),
        t_qpu=pss.t_qpu,
        t_unembed=pss.t_unembed,
        t_mapping=MAPPING_OVERHEAD_S,
        wall_time=time.perf_counter() - t0,
        target_size=target_size,
        chain_strength=strength,
        settings=settings,
    )
