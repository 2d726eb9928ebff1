import itertools
import math

import numpy as np
import pytest

from dbk import Qubo, build_mc_qubo, energy, generate_er, qubo_to_ising
from dbk.anneal import (
    ParallelLayout,
    PhysicalIsing,
    build_chimera,
    chain_strength_utc,
    clique_embedding,
    embed_ising,
    emulated_qpu_time,
    sa_sample,
    unembed_majority_vote,
)
from conftest import cycle_graph, path_graph


def test_chain_strength_rms():
    q = Qubo(linear={0: -1, 1: -1, 2: -1}, quadratic={(0, 1): 2, (1, 2): 2})
    assert chain_strength_utc(q, 0.2) == pytest.approx(0.4)
    q1 = Qubo(linear={}, quadratic={(0, 1): 8})
    assert chain_strength_utc(q1, 1.0) == pytest.approx(8.0)


def test_chain_strength_on_mc_qubo():
    # every quadratic coefficient of a clique QUBO equals B=2
    for seed in range(5):
        g = generate_er(10, 0.5, seed)
        if g.num_edges == 45:
            continue  # complete graph has no quadratic terms
        assert chain_strength_utc(build_mc_qubo(g), 0.2) == pytest.approx(0.4)


def test_chain_strength_quadratic_free_fallback(caplog):
    q = Qubo(linear={0: -3.0, 1: 1.0}, quadratic={})
    with caplog.at_level("WARNING"):
        s = chain_strength_utc(q, 0.5)
    assert s == pytest.approx(1.5)
    assert any("quadratic-free" in r.message for r in caplog.records)


def _single_chain_layout(c: int = 2) -> ParallelLayout:
    hw = build_chimera(c)
    return ParallelLayout((clique_embedding(hw, (0, 0), c, 1),))


def test_embed_ising_splits_linear_uniformly():
    layout = _single_chain_layout(2)  # one chain of length 3
    phys = embed_ising(
        __import__("dbk").Ising(linear={7: -0.5}, quadratic={}), layout, 1.0
    )
    chain = layout.embeddings[0].chains[0]
    assert len(chain.qubits) == 3
    for q in chain.qubits:
        assert phys.h[q] == pytest.approx(-0.5 / 3)
    # every intra-chain coupler carries -S
    for pair in layout.embeddings[0].intra_couplers[0]:
        assert phys.j[pair] == pytest.approx(-1.0)


def test_embed_ising_splits_coupler_over_shared_physical_couplers():
    hw = build_chimera(1)
    emb = clique_embedding(hw, (0, 0), 1, 2)
    layout = ParallelLayout((emb,))
    from dbk import Ising

    phys = embed_ising(Ising(linear={}, quadratic={(0, 1): 0.5}), layout, 2.0)
    shared = emb.couplers_between(0, 1)
    assert len(shared) == 2  # both K4,4 cross couplers join the two chains
    for pair in shared:
        assert phys.j[pair] == pytest.approx(0.25)


def test_embed_ising_rejects_undersized_embedding():
    layout = _single_chain_layout(2)
    from dbk import Ising
    from dbk.anneal import EmbeddingError

    with pytest.raises(EmbeddingError):
        embed_ising(Ising(linear={0: 1.0, 1: 1.0}, quadratic={}), layout, 1.0)


def test_physical_energy_is_sum_of_replicas_plus_chain_terms():
    g = path_graph(4)
    q = build_mc_qubo(g)
    hw = build_chimera(2)
    layout = ParallelLayout(
        (clique_embedding(hw, (0, 0), 1, 4), clique_embedding(hw, (1, 1), 1, 4))
    )
    phys = embed_ising(qubo_to_ising(q), layout, 1.5)
    rng = np.random.default_rng(0)
    qubits_by_emb = [emb.all_qubits() for emb in layout.embeddings]
    for _ in range(20):
        s = {qid: int(v) for qid, v in zip(phys.qubits, rng.choice([-1, 1], len(phys.qubits)))}
        total = phys.energy(s)
        parts = 0.0
        for qs in qubits_by_emb:
            parts += sum(hv * s[qid] for qid, hv in phys.h.items() if qid in qs)
            parts += sum(
                jv * s[a] * s[b] for (a, b), jv in phys.j.items() if a in qs and b in qs
            )
        assert total == pytest.approx(parts)
        # no coupler crosses replicas
        for a, b in phys.j:
            assert not (a in qubits_by_emb[0] and b in qubits_by_emb[1])


def test_physical_ground_state_decodes_to_logical_ground_state():
    # brute force over the whole physical spin space (<= 20 qubits): with
    # S >= B the decoded ground state must minimize the logical problem
    for g in (path_graph(4), cycle_graph(4)):
        q = build_mc_qubo(g)  # B = 2
        isg = qubo_to_ising(q)
        hw = build_chimera(1)
        emb = clique_embedding(hw, (0, 0), 1, g.n)  # chains of length 2
        layout = ParallelLayout((emb,))
        phys = embed_ising(isg, layout, 2.0)
        qubits = phys.qubits
        assert len(qubits) <= 20

        logical_best = min(
            energy(q, dict(zip(sorted(g.vertices), bits)))
            for bits in itertools.product((0, 1), repeat=g.n)
        )
        best_e = None
        best_states = []
        for bits in itertools.product((-1, 1), repeat=len(qubits)):
            s = dict(zip(qubits, bits))
            e = phys.energy(s)
            if best_e is None or e < best_e - 1e-12:
                best_e, best_states = e, [s]
            elif abs(e - best_e) <= 1e-12:
                best_states.append(s)
        for s in best_states:
            decoded, broken = unembed_majority_vote(s, emb, seed=0)
            assert broken == 0  # ground states keep chains intact at S >= B
            x = {v: (decoded[i] + 1) // 2 for i, v in enumerate(sorted(g.vertices))}
            assert energy(q, x) == pytest.approx(logical_best)


def test_sa_single_qubit_minimizes_field():
    phys = PhysicalIsing(h={0: -1.0}, j={})
    out = sa_sample(phys, num_reads=50, sweeps=10, seed=3)
    assert np.all(out.states == 1)
    phys2 = PhysicalIsing(h={0: 1.0}, j={})
    out2 = sa_sample(phys2, num_reads=50, sweeps=10, seed=3)
    assert np.all(out2.states == -1)


def test_sa_two_spin_ferromagnet_aligns():
    phys = PhysicalIsing(h={0: 0.0, 1: 0.0}, j={(0, 1): -1.0})
    out = sa_sample(phys, num_reads=200, sweeps=100, seed=9)
    aligned = (out.states[:, 0] == out.states[:, 1]).mean()
    assert aligned >= 0.99
    assert np.all(out.energies[out.states[:, 0] == out.states[:, 1]] == -1.0)


def test_sa_deterministic_given_seed():
    g = generate_er(8, 0.4, 2)
    phys = embed_ising(qubo_to_ising(build_mc_qubo(g)), _layout_for(g.n), 0.4)
    a = sa_sample(phys, num_reads=64, sweeps=50, seed=11)
    b = sa_sample(phys, num_reads=64, sweeps=50, seed=11)
    assert np.array_equal(a.states, b.states)
    assert np.array_equal(a.energies, b.energies)
    c = sa_sample(phys, num_reads=64, sweeps=50, seed=12)
    assert not np.array_equal(a.states, c.states)


def _layout_for(n: int) -> ParallelLayout:
    c = math.ceil(n / 4)
    hw = build_chimera(c)
    return ParallelLayout((clique_embedding(hw, (0, 0), c, n),))


def test_sa_energies_match_reported_states():
    g = generate_er(6, 0.5, 8)
    phys = embed_ising(qubo_to_ising(build_mc_qubo(g)), _layout_for(g.n), 0.4)
    out = sa_sample(phys, num_reads=16, sweeps=20, seed=5)
    for r in range(out.num_reads):
        assert out.energies[r] == pytest.approx(phys.energy(out.assignment(r)))


def test_sa_validates_arguments():
    phys = PhysicalIsing(h={0: 1.0}, j={})
    with pytest.raises(ValueError):
        sa_sample(phys, num_reads=0)
    with pytest.raises(ValueError):
        sa_sample(phys, sweeps=0)
    with pytest.raises(ValueError):
        sa_sample(phys, beta_range=(0.0, 1.0))


def test_emulated_qpu_time_model():
    # declared synthetic model: reads * (50us + 150us) + 10ms
    assert emulated_qpu_time(1000) == pytest.approx(1000 * 200e-6 + 10e-3)
