"""Majority-vote decoding of chains back to logical variables.

A chain decodes to the value carried by the majority of its qubits. A chain
whose qubits disagree at all is counted as broken; an exact 50/50 split is
resolved by a fair seeded coin. Works for spin (+1/-1) and binary (1/0)
state encodings alike: the "high" value is the larger of the two.
"""

from __future__ import annotations

from typing import Mapping

import numpy as np

from .embedding import Embedding


def unembed_majority_vote(
    s: Mapping[int, int], e: Embedding, seed: int
) -> tuple[dict[int, int], int]:
    """Decode one physical read over embedding ``e``.

    Returns ({logical slot: value}, broken_chain_count). Tie coins are drawn
    from a generator seeded with ``seed``, consumed only on ties, in chain
    order, so results are reproducible.
    """
    rng = np.random.default_rng(seed)
    decoded: dict[int, int] = {}
    broken = 0
    for chain in e.chains:
        values = [s[q] for q in chain.qubits]
        hi = max(values)
        lo = min(values)
        if hi == lo:
            decoded[chain.logical] = hi
            continue
        broken += 1
        n_hi = sum(1 for v in values if v == hi)
        n_lo = len(values) - n_hi
        if n_hi > n_lo:
            decoded[chain.logical] = hi
        elif n_hi < n_lo:
            decoded[chain.logical] = lo
        else:
            decoded[chain.logical] = hi if rng.random() < 0.5 else lo
    return decoded, broken


def batch_majority_vote(
    states: np.ndarray,
    chain_columns: np.ndarray,
    read_seeds: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized spin-state decoding for many reads at once.

    ``states`` is (reads, qubits) in {-1,+1}; ``chain_columns`` is
    (chains, chain_len) of column indices; ``read_seeds`` supplies the tie
    coin seed per read. Matches unembed_majority_vote read by read.

    Returns (decoded spins (reads, chains) int8, broken counts (reads,)).
    """
    sums = states[:, chain_columns].sum(axis=2, dtype=np.int32)
    chain_len = chain_columns.shape[1]
    decoded = np.where(sums > 0, 1, -1).astype(np.int8)
    broken = (np.abs(sums) < chain_len).sum(axis=1).astype(np.int64)
    tie_rows = np.nonzero((sums == 0).any(axis=1))[0]
    for r in tie_rows:
        rng = np.random.default_rng(int(read_seeds[r]))
        for c in np.nonzero(sums[r] == 0)[0]:
            decoded[r, c] = 1 if rng.random() < 0.5 else -1
    return decoded, broken
