"""Seeded simulated-annealing sampler standing in for the quantum backend.

Each read starts from an independent random spin state and runs single-spin-
flip Metropolis with a geometric inverse-temperature ramp. Reads are seeded
individually (base seed + read index), so sample sets are bit-reproducible
and reads are independent of each other.

Timing model
------------
Reported QPU time is *emulated* with a fixed synthetic model so that the
time-to-solution arithmetic can be exercised deterministically:

    T_QPU     = num_reads * (50 us anneal + 150 us per-read overhead) + 10 ms programming
    T_unembed = 1 us per decoded chain per read
    T_map     = 1 ms per backend call (problem mapping, counted as classical time)

Wall-clock time is recorded separately and never mixed into these fields.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass

import numpy as np
from numba import njit

from .physical import PhysicalIsing

ANNEAL_TIME_S = 50e-6
READ_OVERHEAD_S = 150e-6
PROGRAMMING_OVERHEAD_S = 10e-3
UNEMBED_CHAIN_READ_S = 1e-6
MAPPING_OVERHEAD_S = 1e-3


@dataclass
class SamplerSettings:
    """Knobs for the emulated backend, JSON- and CLI-addressable."""

    num_reads: int = 1000
    sweeps: int = 1000
    beta_min: float = 0.1
    beta_max: float = 10.0
    chain_strength_prefactor: float = 0.2
    hardware_m: int = 16
    seed: int = 0

    def to_json_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json_dict(cls, data: dict) -> "SamplerSettings":
        return cls(**data)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def emulated_qpu_time(num_reads: int) -> float:
    return num_reads * (ANNEAL_TIME_S + READ_OVERHEAD_S) + PROGRAMMING_OVERHEAD_S


@dataclass(eq=False)
class PhysicalSampleSet:
    """Raw sampler output: one final spin state and energy per read.

    ``states`` is (num_reads, len(qubit_order)) with entries in {-1, +1};
    column order follows ``qubit_order``. Broken-chain counts and unembedding
    time are filled in by the decoding stage.
    """

    qubit_order: tuple[int, ...]
    states: np.ndarray
    energies: np.ndarray
    t_qpu: float
    wall_time: float
    broken_chain_counts: np.ndarray | None = None
    t_unembed: float = 0.0

    @property
    def num_reads(self) -> int:
        return self.states.shape[0]

    def assignment(self, read: int) -> dict[int, int]:
        row = self.states[read]
        return {q: int(row[i]) for i, q in enumerate(self.qubit_order)}


@njit(cache=True)
def _anneal_kernel(h, nbr_ptr, nbr_idx, nbr_weight, betas, num_reads, seed_base):
    n = h.shape[0]
    out = np.empty((num_reads, n), dtype=np.int8)
    for r in range(num_reads):
        np.random.seed(seed_base + r)
        s = np.empty(n, dtype=np.int8)
        for i in range(n):
            s[i] = 1 if np.random.random() < 0.5 else -1
        for b in betas:
            for i in range(n):
                field = h[i]
                for p in range(nbr_ptr[i], nbr_ptr[i + 1]):
                    field += nbr_weight[p] * s[nbr_idx[p]]
                delta = -2.0 * s[i] * field
                if delta <= 0.0:
                    s[i] = -s[i]
                elif np.random.random() < np.exp(-b * delta):
                    s[i] = -s[i]
        out[r] = s
    return out


def sa_sample(
    phys: PhysicalIsing,
    num_reads: int = 1000,
    sweeps: int = 1000,
    beta_range: tuple[float, float] = (0.1, 10.0),
    seed: int = 0,
) -> PhysicalSampleSet:
    """Sample the physical Ising problem; deterministic given the seed."""
    if num_reads < 1:
        raise ValueError("num_reads must be >= 1")
    if sweeps < 1:
        raise ValueError("sweeps must be >= 1")
    beta_min, beta_max = beta_range
    if not (0 < beta_min <= beta_max):
        raise ValueError(f"need 0 < beta_min <= beta_max, got {beta_range}")

    t0 = time.perf_counter()
    qubit_order = phys.qubits
    pos = {q: i for i, q in enumerate(qubit_order)}
    n = len(qubit_order)

    h = np.zeros(n, dtype=np.float64)
    for q, hv in phys.h.items():
        h[pos[q]] = hv
    nbrs: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    for (a, b), jv in phys.j.items():
        ia, ib = pos[a], pos[b]
        nbrs[ia].append((ib, jv))
        nbrs[ib].append((ia, jv))
    nbr_ptr = np.zeros(n + 1, dtype=np.int64)
    flat: list[tuple[int, float]] = []
    for i in range(n):
        nbrs[i].sort()
        flat.extend(nbrs[i])
        nbr_ptr[i + 1] = len(flat)
    nbr_idx = np.array([x[0] for x in flat], dtype=np.int64)
    nbr_weight = np.array([x[1] for x in flat], dtype=np.float64)

    if sweeps == 1:
        betas = np.array([beta_max], dtype=np.float64)
    else:
        betas = np.geomspace(beta_min, beta_max, sweeps)

    seed_base = seed & 0x7FFFFFFF
    states = _anneal_kernel(h, nbr_ptr, nbr_idx, nbr_weight, betas, num_reads, seed_base)

    sf = states.astype(np.float64)
    energies = sf @ h
    if phys.j:
        ia = np.array([pos[a] for a, _ in phys.j], dtype=np.int64)
        ib = np.array([pos[b] for _, b in phys.j], dtype=np.int64)
        w = np.array(list(phys.j.values()), dtype=np.float64)
        energies = energies + (sf[:, ia] * sf[:, ib]) @ w

    return PhysicalSampleSet(
        qubit_order=qubit_order,
        states=states,
        energies=energies,
        t_qpu=emulated_qpu_time(num_reads),
        wall_time=time.perf_counter() - t0,
    )
