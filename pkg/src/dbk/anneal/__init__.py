"""Emulated quantum-annealer backend: hardware graph, clique minor
embeddings, chain-strength heuristic, seeded stochastic sampling, and
majority-vote unembedding."""

from .embedding import (
    Chain,
    Embedding,
    EmbeddingError,
    ParallelLayout,
    clique_embedding,
    make_embedding,
    pack_parallel_embeddings,
)
from .hardware import HardwareGraph, build_chimera, chimera_qubit
from .physical import PhysicalIsing, chain_strength_utc, embed_ising
from .sampler import (
    ANNEAL_TIME_S,
    MAPPING_OVERHEAD_S,
    PROGRAMMING_OVERHEAD_S,
    READ_OVERHEAD_S,
    UNEMBED_CHAIN_READ_S,
    PhysicalSampleSet,
    SamplerSettings,
    emulated_qpu_time,
    sa_sample,
)
from .solve import ReadRecord, SampleSet, parallel_solve
from .unembed import batch_majority_vote, unembed_majority_vote

__all__ = [
    "ANNEAL_TIME_S",
    "Chain",
    "Embedding",
    "EmbeddingError",
    "HardwareGraph",
    "MAPPING_OVERHEAD_S",
    "PROGRAMMING_OVERHEAD_S",
    "ParallelLayout",
    "PhysicalIsing",
    "PhysicalSampleSet",
    "READ_OVERHEAD_S",
    "ReadRecord",
    "SampleSet",
    "SamplerSettings",
    "UNEMBED_CHAIN_READ_S",
    "batch_majority_vote",
    "build_chimera",
    "chain_strength_utc",
    "chimera_qubit",
    "clique_embedding",
    "embed_ising",
    "emulated_qpu_time",
    "make_embedding",
    "pack_parallel_embeddings",
    "parallel_solve",
    "sa_sample",
    "unembed_majority_vote",
]
