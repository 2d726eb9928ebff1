"""Fixed clique minor-embeddings on Chimera blocks and disjoint packings.

The clique embedding is the classic "L-shape" construction: on a c x c block
of cells, logical slot (a, k) occupies the right-k qubits of row a across
columns 0..a and the left-k qubits of column a across rows a..c-1, meeting
at the diagonal cell. This yields a K_{4c} minor whose chains all have
length c+1, and any two chains meet inside some shared cell, where the
K4,4 coupling provides the required inter-chain coupler.

All embedding invariants (chain connectivity, chain disjointness, all-pairs
inter-chain couplers for clique embeddings) are verified exhaustively at
construction time, and each embedding records the physical couplers inside
every chain and between every chain pair so problems can be mapped onto it
without consulting the hardware graph again.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .hardware import HardwareGraph, chimera_qubit

Coupler = tuple[int, int]


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class Chain:
    """Physical qubits representing one logical slot; induced subgraph connected."""

    logical: int
    qubits: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.qubits)


@dataclass(frozen=True, eq=False)
class Embedding:
    """Disjoint connected chains for logical slots 0..n-1, plus the physical
    couplers inside each chain and between every connected chain pair."""

    chains: tuple[Chain, ...]
    intra_couplers: tuple[tuple[Coupler, ...], ...]
    inter_couplers: dict[tuple[int, int], tuple[Coupler, ...]] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.chains)

    def all_qubits(self) -> frozenset[int]:
        return frozenset(q for ch in self.chains for q in ch.qubits)

    def couplers_between(self, i: int, j: int) -> tuple[Coupler, ...]:
        key = (i, j) if i < j else (j, i)
        return self.inter_couplers.get(key, ())


@dataclass(frozen=True, eq=False)
class ParallelLayout:
    """Mutually disjoint embeddings sharing one hardware graph."""

    embeddings: tuple[Embedding, ...]

    def __len__(self) -> int:
        return len(self.embeddings)


def make_embedding(
    hw: HardwareGraph, chains: tuple[Chain, ...], require_all_pairs: bool = True
) -> Embedding:
    """Validate chains against the hardware and assemble an Embedding.

    Checks, exhaustively: every chain non-empty, on-chip, connected in the
    hardware graph, and disjoint from the others; with ``require_all_pairs``,
    every chain pair shares at least one physical coupler.
    """
    seen: set[int] = set()
    for chain in chains:
        qs = set(chain.qubits)
        if not qs:
            raise EmbeddingError(f"chain {chain.logical} is empty")
        if not qs <= hw.qubits:
            raise EmbeddingError(f"chain {chain.logical} uses qubits outside the hardware")
        if qs & seen:
            raise EmbeddingError(f"chain {chain.logical} overlaps another chain")
        seen |= qs
        start = chain.qubits[0]
        reached = {start}
        frontier = deque([start])
        while frontier:
            q = frontier.popleft()
            for p in qs - reached:
                if hw.has_coupler(q, p):
                    reached.add(p)
                    frontier.append(p)
        if reached != qs:
            raise EmbeddingError(f"chain {chain.logical} is not connected")

    owner = {q: i for i, ch in enumerate(chains) for q in ch.qubits}
    intra: list[list[Coupler]] = [[] for _ in chains]
    inter: dict[tuple[int, int], list[Coupler]] = {}
    for a, b in hw.couplers:
        ca, cb = owner.get(a), owner.get(b)
        if ca is None or cb is None:
            continue
        if ca == cb:
            intra[ca].append((a, b))
        else:
            key = (ca, cb) if ca < cb else (cb, ca)
            inter.setdefault(key, []).append((a, b))

    n = len(chains)
    if require_all_pairs:
        for i in range(n):
            for j in range(i + 1, n):
                if (i, j) not in inter:
                    raise EmbeddingError(f"chains {i} and {j} share no coupler")

    return Embedding(
        chains=chains,
        intra_couplers=tuple(tuple(sorted(c)) for c in intra),
        inter_couplers={k: tuple(sorted(v)) for k, v in sorted(inter.items())},
    )


def clique_embedding(
    hw: HardwareGraph, sub_origin: tuple[int, int], c: int, n: int
) -> Embedding:
    """Embedding of n <= 4c logical slots on the c x c block at sub_origin.

    All chains have length c+1. Chains are ordered by (diagonal index,
    in-cell index) and the first n are returned.
    """
    if hw.family != "chimera":
        raise EmbeddingError(f"unsupported hardware family {hw.family!r}")
    if c < 1:
        raise EmbeddingError("block size c must be >= 1")
    if n < 1 or n > 4 * c:
        raise EmbeddingError(f"a {c}x{c} block supports 1..{4 * c} chains, requested {n}")
    row0, col0 = sub_origin
    if row0 < 0 or col0 < 0 or row0 + c > hw.m or col0 + c > hw.m:
        raise EmbeddingError(f"{c}x{c} block at {sub_origin} does not fit an m={hw.m} grid")
    m = hw.m
    chains = []
    for slot in range(n):
        a, k = divmod(slot, 4)
        horiz = [chimera_qubit(m, row0 + a, col0 + col, 1, k) for col in range(a + 1)]
        vert = [chimera_qubit(m, row0 + row, col0 + a, 0, k) for row in range(a, c)]
        chains.append(Chain(logical=slot, qubits=tuple(horiz + vert)))
    return make_embedding(hw, tuple(chains))


def pack_parallel_embeddings(hw: HardwareGraph, n: int) -> ParallelLayout:
    """Tile the grid with disjoint c x c blocks (c = ceil(n/4)), one size-n
    clique embedding per block: floor(m/c)^2 embeddings in row-major order.
    """
    m = hw.m
    if n < 1 or n > 4 * m:
        raise EmbeddingError(f"m={m} hardware supports 1..{4 * m} variables, requested {n}")
    c = -(-n // 4)
    per_side = m // c
    embeddings = []
    for bi in range(per_side):
        for bj in range(per_side):
            embeddings.append(clique_embedding(hw, (bi * c, bj * c), c, n))
    layout = ParallelLayout(embeddings=tuple(embeddings))
    used: set[int] = set()
    for emb in layout.embeddings:
        qs = emb.all_qubits()
        if qs & used:
            raise EmbeddingError("parallel embeddings overlap")
        used |= qs
    return layout
