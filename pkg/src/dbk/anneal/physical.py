"""Mapping a logical Ising problem onto embedded hardware qubits.

Each logical field h_i is split uniformly over the qubits of variable i's
chain, each logical coupler J_ij is split uniformly over all physical
couplers joining the two chains, and every coupler inside a chain receives
the ferromagnetic chain coupling -S. A parallel layout produces one replica
of the logical problem per embedding; replicas are disjoint, so the physical
energy is block-separable across them.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Mapping

from ..qubo import Ising, Qubo
from .embedding import Coupler, EmbeddingError, ParallelLayout

logger = logging.getLogger(__name__)


def chain_strength_utc(q: Qubo, prefactor: float = 0.2) -> float:
    """Uniform-torque-compensation chain strength.

    prefactor times the root-mean-square of the QUBO's quadratic
    coefficients. A quadratic-free QUBO falls back to prefactor times the
    largest |linear| coefficient (logged), since there is no coupler scale
    to compensate against.
    """
    if prefactor <= 0:
        raise ValueError("prefactor must be positive")
    if q.quadratic:
        rms = math.sqrt(sum(c * c for c in q.quadratic.values()) / len(q.quadratic))
        return prefactor * rms
    logger.warning("chain_strength_utc on a quadratic-free qubo; using linear fallback")
    scale = max((abs(c) for c in q.linear.values()), default=1.0)
    return prefactor * scale


@dataclass(eq=False)
class PhysicalIsing:
    """An Ising problem over hardware qubits, optionally tied to the layout
    and logical-variable binding that produced it."""

    h: dict[int, float]
    j: dict[Coupler, float]
    layout: ParallelLayout | None = None
    slot_vars: tuple[int, ...] | None = None  # logical var bound to each used slot
    chain_strength: float | None = None

    @property
    def qubits(self) -> tuple[int, ...]:
        qs = set(self.h)
        for a, b in self.j:
            qs.add(a)
            qs.add(b)
        return tuple(sorted(qs))

    def energy(self, s: Mapping[int, int]) -> float:
        e = sum(hv * s[q] for q, hv in self.h.items())
        e += sum(jv * s[a] * s[b] for (a, b), jv in self.j.items())
        return e


def embed_ising(logical: Ising, layout: ParallelLayout, chain_strength: float) -> PhysicalIsing:
    """Replicate the logical problem onto every embedding of the layout.

    Logical variables are bound to embedding slots in sorted-id order. Slots
    beyond the number of logical variables stay at zero field (the fixed
    embedding is reused as-is when the problem is smaller than it), but all
    chains, used or not, keep their -S internal couplers.
    """
    variables = tuple(sorted(logical.variables))
    n_vars = len(variables)
    h: dict[int, float] = {}
    j: dict[Coupler, float] = {}

    for emb in layout.embeddings:
        if emb.size < n_vars:
            raise EmbeddingError(
                f"embedding with {emb.size} chains cannot hold {n_vars} logical variables"
            )
        slot_of = {v: i for i, v in enumerate(variables)}
        for chain in emb.chains:
            for q in chain.qubits:
                h[q] = 0.0
        for i, v in enumerate(variables):
            qs = emb.chains[i].qubits
            share = logical.linear.get(v, 0.0) / len(qs)
            for q in qs:
                h[q] += share
        for (u, v), coupling in logical.quadratic.items():
            if coupling == 0.0:
                continue
            physical = emb.couplers_between(slot_of[u], slot_of[v])
            if not physical:
                raise EmbeddingError(
                    f"no physical coupler joins the chains of variables {u} and {v}"
                )
            share = coupling / len(physical)
            for pair in physical:
                j[pair] = j.get(pair, 0.0) + share
        for couplers in emb.intra_couplers:
            for pair in couplers:
                j[pair] = j.get(pair, 0.0) - chain_strength

    return PhysicalIsing(
        h=h,
        j=j,
        layout=layout,
        slot_vars=variables,
        chain_strength=chain_strength,
    )
