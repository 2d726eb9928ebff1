import random

import pytest

from dbk import (
    Graph,
    bound_report,
    edge_count_upper_bound,
    generate_er,
    greedy_clique_lower_bound,
    greedy_coloring_upper_bound,
    is_clique,
    k_core,
    max_clique_bruteforce,
    upper_bound,
)
from conftest import complete_graph, cycle_graph, star_graph


def test_k_core_keeps_cycle():
    c4 = cycle_graph(4)
    assert k_core(c4, 2) == c4


def test_k_core_kills_star():
    assert k_core(star_graph(4), 2).n == 0


def test_k_core_cascades_through_pendant():
    # triangle {0,1,2} with pendant 3 hanging off vertex 2
    g = Graph(range(4), [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert k_core(g, 2) == complete_graph(3)


def test_k_core_zero_is_identity():
    g = generate_er(10, 0.3, 1)
    assert k_core(g, 0) is g
    with pytest.raises(ValueError):
        k_core(g, -1)


def test_k_core_idempotent():
    rng = random.Random(5)
    for _ in range(30):
        g = generate_er(15, rng.uniform(0.1, 0.9), rng.randrange(10**6))
        for k in range(5):
            once = k_core(g, k)
            assert k_core(once, k) == once


def test_k_core_preserves_large_cliques():
    # every clique of size >= k+1 must survive the k-core
    rng = random.Random(9)
    for _ in range(40):
        g = generate_er(13, rng.uniform(0.3, 0.9), rng.randrange(10**6))
        omega = max_clique_bruteforce(g).size
        cliques = _all_cliques(g)
        for k in range(omega + 1):
            core_vertices = set(k_core(g, k).vertices)
            for c in cliques:
                if len(c) >= k + 1:
                    assert c <= core_vertices


def _all_cliques(g: Graph) -> list[frozenset[int]]:
    found = []

    def grow(current: frozenset, candidates: list[int]):
        found.append(current)
        for i, v in enumerate(candidates):
            grow(current | {v}, [u for u in candidates[i + 1 :] if g.has_edge(u, v)])

    grow(frozenset(), list(g.vertices))
    return found


def test_greedy_lower_bound_examples():
    assert greedy_clique_lower_bound(Graph([])) == frozenset()
    assert greedy_clique_lower_bound(complete_graph(5)) == frozenset(range(5))
    c5_witness = greedy_clique_lower_bound(cycle_graph(5))
    assert len(c5_witness) == 2  # C5 is triangle-free
    assert is_clique(cycle_graph(5), c5_witness)


def test_greedy_lower_bound_witness_is_clique():
    rng = random.Random(2)
    for _ in range(50):
        g = generate_er(20, rng.uniform(0.1, 0.9), rng.randrange(10**6))
        w = greedy_clique_lower_bound(g)
        assert is_clique(g, w)


def test_coloring_upper_bound_examples():
    assert greedy_coloring_upper_bound(Graph([])) == 0
    assert greedy_coloring_upper_bound(Graph([0])) == 1
    assert greedy_coloring_upper_bound(complete_graph(4)) == 4
    assert greedy_coloring_upper_bound(cycle_graph(5)) == 3  # odd cycle


def test_edge_count_upper_bound():
    assert edge_count_upper_bound(Graph([])) == 0
    assert edge_count_upper_bound(Graph(range(4))) == 1  # no edges
    assert edge_count_upper_bound(complete_graph(4)) == 4  # |E| = 6
    # |E| = 5: K3 needs 3 <= 5 but K4 needs 6
    assert edge_count_upper_bound(Graph(range(6), [(i, i + 1) for i in range(5)])) == 3


def test_upper_bound_examples():
    assert upper_bound(complete_graph(4)) == 4
    assert upper_bound(cycle_graph(5)) == 3
    assert upper_bound(Graph([])) == 0


def test_bounds_sandwich_true_omega():
    rng = random.Random(7)
    for _ in range(60):
        g = generate_er(rng.randint(4, 20), rng.uniform(0.1, 0.9), rng.randrange(10**6))
        omega = max_clique_bruteforce(g).size
        assert len(greedy_clique_lower_bound(g)) <= omega <= upper_bound(g)


def test_bound_report():
    rep = bound_report(cycle_graph(5))
    assert rep.lower == 2 and rep.upper == 3
    assert is_clique(cycle_graph(5), rep.lower_witness)
