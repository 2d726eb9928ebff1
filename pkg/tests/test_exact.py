import random

import pytest

from dbk import (
    Graph,
    generate_er,
    induced_subgraph,
    is_clique,
    max_clique_bruteforce,
    max_clique_exact,
)
from conftest import complete_graph, cycle_graph, petersen_graph


def test_exact_trivial_cases():
    assert max_clique_exact(Graph([])).size == 0
    assert max_clique_exact(complete_graph(7)).size == 7


def test_bruteforce_examples():
    assert max_clique_bruteforce(cycle_graph(5)).size == 2
    k4_minus = Graph(range(4), [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert max_clique_bruteforce(k4_minus).size == 3
    assert max_clique_bruteforce(petersen_graph()).size == 2  # triangle-free


def test_bruteforce_size_guard():
    with pytest.raises(ValueError):
        max_clique_bruteforce(Graph(range(26)))


def test_exact_agrees_with_bruteforce_on_seeded_corpus():
    # 200 seeded graphs across the density range, n <= 25
    rng = random.Random(101)
    for i in range(200):
        n = rng.randint(4, 25)
        d = 0.1 + 0.8 * (i % 17) / 16
        g = generate_er(n, d, 9000 + i)
        exact = max_clique_exact(g)
        brute = max_clique_bruteforce(g)
        assert exact.size == brute.size, f"graph {i}: n={n} d={d:.2f}"
        assert is_clique(g, exact.clique)
        assert is_clique(g, brute.clique)


def test_exact_witness_and_determinism():
    g = generate_er(30, 0.6, 77)
    r1 = max_clique_exact(g)
    r2 = max_clique_exact(g)
    assert r1.clique == r2.clique
    assert is_clique(g, r1.clique)
    assert r1.size == len(r1.clique)


def test_omega_monotone_under_induced_subgraphs():
    rng = random.Random(55)
    for _ in range(30):
        g = generate_er(18, rng.uniform(0.2, 0.8), rng.randrange(10**6))
        s = frozenset(v for v in g.vertices if rng.random() < 0.6)
        sub = induced_subgraph(g, s)
        assert max_clique_exact(sub).size <= max_clique_exact(g).size
