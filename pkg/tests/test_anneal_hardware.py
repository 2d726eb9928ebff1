import pytest

from dbk.anneal import (
    Chain,
    EmbeddingError,
    build_chimera,
    clique_embedding,
    make_embedding,
    pack_parallel_embeddings,
)


def test_chimera_single_cell():
    hw = build_chimera(1)
    assert len(hw.qubits) == 8
    assert len(hw.couplers) == 16


def test_chimera_two_by_two():
    hw = build_chimera(2)
    assert len(hw.qubits) == 32
    assert len(hw.couplers) == 16 * 4 + 8 * 2 * 1  # 80


def test_chimera_counts_match_formula():
    for m in (1, 2, 3, 5, 16):
        hw = build_chimera(m)
        assert len(hw.qubits) == 8 * m * m
        assert len(hw.couplers) == 16 * m * m + 8 * m * (m - 1)
    assert len(build_chimera(16).qubits) == 2048


def test_chimera_rejects_zero():
    with pytest.raises(ValueError):
        build_chimera(0)


def test_chimera_simple_graph_structure():
    hw = build_chimera(2)
    adj = hw.adjacency()
    for a, b in hw.couplers:
        assert a != b
        assert a in hw.qubits and b in hw.qubits
    # every qubit in a 2x2 grid touches 4 in-cell plus at most 1 inter-cell
    assert all(4 <= len(adj[q]) <= 5 for q in hw.qubits)


def test_clique_embedding_full_block():
    hw = build_chimera(2)
    emb = clique_embedding(hw, (0, 0), 2, 8)
    assert emb.size == 8
    assert all(len(ch.qubits) == 3 for ch in emb.chains)
    assert len(emb.all_qubits()) == 24
    # all 28 chain pairs share at least one physical coupler
    for i in range(8):
        for j in range(i + 1, 8):
            assert emb.couplers_between(i, j)


def test_clique_embedding_single_cell():
    hw = build_chimera(1)
    emb = clique_embedding(hw, (0, 0), 1, 4)
    assert all(len(ch.qubits) == 2 for ch in emb.chains)
    for i in range(4):
        for j in range(i + 1, 4):
            assert emb.couplers_between(i, j)


def test_clique_embedding_rejects_oversubscription():
    hw = build_chimera(2)
    with pytest.raises(EmbeddingError):
        clique_embedding(hw, (0, 0), 2, 9)  # 9 > 4c
    with pytest.raises(EmbeddingError):
        clique_embedding(hw, (1, 1), 2, 4)  # block leaves the grid


def test_clique_embedding_various_sizes_validate():
    hw = build_chimera(5)
    for c in (1, 2, 3, 4, 5):
        for n in (1, 2, 4 * c - 1, 4 * c):
            emb = clique_embedding(hw, (0, 0), c, n)
            assert emb.size == n
            assert all(len(ch.qubits) == c + 1 for ch in emb.chains)


def test_pack_parallel_embeddings_counts():
    hw = build_chimera(16)
    assert len(pack_parallel_embeddings(hw, 8)) == 64  # c=2 -> floor(16/2)^2
    assert len(pack_parallel_embeddings(hw, 64)) == 1  # c=16
    with pytest.raises(EmbeddingError):
        pack_parallel_embeddings(build_chimera(4), 20)  # 20 > 4m


def test_pack_parallel_embeddings_disjoint():
    hw = build_chimera(6)
    layout = pack_parallel_embeddings(hw, 7)  # c=2 -> 9 embeddings
    assert len(layout) == 9
    seen: set[int] = set()
    for emb in layout.embeddings:
        qs = emb.all_qubits()
        assert not qs & seen
        seen |= qs


def test_make_embedding_rejects_bad_chains():
    hw = build_chimera(2)
    good = clique_embedding(hw, (0, 0), 2, 4)
    # overlapping chains
    with pytest.raises(EmbeddingError):
        make_embedding(hw, (good.chains[0], Chain(1, good.chains[0].qubits)))
    # disconnected chain: two qubits with no coupler between them
    q_far = tuple(sorted(hw.qubits))[:1] + tuple(sorted(hw.qubits))[-1:]
    with pytest.raises(EmbeddingError):
        make_embedding(hw, (Chain(0, q_far),))
    # chain off the chip
    with pytest.raises(EmbeddingError):
        make_embedding(hw, (Chain(0, (10**6,)),))
    # empty chain
    with pytest.raises(EmbeddingError):
        make_embedding(hw, (Chain(0, ()),))


def test_make_embedding_requires_pairwise_couplers():
    hw = build_chimera(2)
    c0 = Chain(0, (0,))  # cell (0,0) left-0
    c1 = Chain(1, (4,))  # cell (0,0) right-0: coupled to left-0
    c2 = Chain(2, (12,))  # cell (0,1) right-0: coupled to c1 but not c0
    with pytest.raises(EmbeddingError):
        make_embedding(hw, (c0, c1, c2))
    # as a path-connected (non-clique) embedding it is fine
    emb = make_embedding(hw, (c0, c1, c2), require_all_pairs=False)
    assert emb.couplers_between(0, 1) and emb.couplers_between(1, 2)
    assert not emb.couplers_between(0, 2)
