import random

import pytest

from dbk import (
    DbkConfig,
    Graph,
    SubProblem,
    dbk_solve,
    generate_er,
    is_clique,
    max_clique_bruteforce,
    max_clique_exact,
    split,
)
from conftest import complete_graph, petersen_graph


def exact_subsolver(g: Graph) -> frozenset:
    return max_clique_exact(g).clique


def test_split_k4_minus_edge(k4_minus_edge):
    p = SubProblem(k4_minus_edge, frozenset())
    take, leave = split(p, 3)
    assert take.graph == Graph([1, 2], [(1, 2)])
    assert take.extracted == frozenset({3})
    assert leave.graph == Graph([1, 2, 4], [(1, 2), (1, 4), (2, 4)])
    assert leave.extracted == frozenset()


def test_split_triangle_and_singleton():
    p = SubProblem(complete_graph(3), frozenset())
    take, leave = split(p, 0)
    assert take.graph.n == 2 and take.graph.num_edges == 1
    assert leave.graph.n == 2 and leave.graph.num_edges == 1
    single = SubProblem(Graph([5]), frozenset())
    t, l = split(single, 5)
    assert t.graph.n == 0 and t.extracted == frozenset({5})
    assert l.graph.n == 0
    with pytest.raises(ValueError):
        split(single, 6)


def test_split_children_strictly_smaller():
    rng = random.Random(4)
    for _ in range(20):
        g = generate_er(12, rng.uniform(0.2, 0.8), rng.randrange(10**6))
        p = SubProblem(g, frozenset())
        v = rng.choice(g.vertices)
        take, leave = split(p, v)
        assert take.graph.n < g.n and leave.graph.n < g.n


def test_branch_invariant_extracted_lifts_to_original():
    # extracted union any clique of the child graph is a clique of the input
    rng = random.Random(13)
    for _ in range(20):
        g = generate_er(14, rng.uniform(0.3, 0.8), rng.randrange(10**6))
        frontier = [SubProblem(g, frozenset())]
        for _ in range(3):
            nxt = []
            for p in frontier:
                if p.graph.n == 0:
                    continue
                v = min(p.graph.vertices, key=lambda u: (p.graph.degree(u), u))
                nxt.extend(split(p, v))
            frontier = nxt
        for p in frontier:
            assert is_clique(g, p.extracted)
            # singletons and edges of the child graph are cliques of it, so
            # their union with the extracted set must lift to the original
            for w in p.graph.vertices:
                assert is_clique(g, p.extracted | {w})
            for u, w in list(p.graph.edges())[:10]:
                assert is_clique(g, p.extracted | {u, w})


def test_dbk_k5_no_subsolver_needed():
    calls = []

    def counting_subsolver(g):
        calls.append(g)
        return max_clique_exact(g).clique

    res = dbk_solve(complete_graph(5), DbkConfig(cutoff=3, subsolver=counting_subsolver))
    assert res.size == 5
    assert res.subgraph_count == 0 and not calls  # greedy bound already optimal


def test_dbk_petersen():
    res = dbk_solve(petersen_graph(), DbkConfig(cutoff=4, subsolver=exact_subsolver))
    assert res.size == 2


def test_dbk_empty_graph():
    res = dbk_solve(Graph([]), DbkConfig(cutoff=2, subsolver=exact_subsolver))
    assert res.size == 0 and res.clique == frozenset()


def test_dbk_matches_bruteforce_many_graphs_and_cutoffs():
    rng = random.Random(88)
    for i in range(60):
        n = rng.randint(5, 25)
        d = 0.1 + 0.8 * (i % 13) / 12
        g = generate_er(n, d, 4000 + i)
        want = max_clique_bruteforce(g).size
        for cutoff in (1, 4, 9, 16):
            res = dbk_solve(g, DbkConfig(cutoff=cutoff, subsolver=exact_subsolver))
            assert res.size == want, f"n={n} d={d:.2f} L={cutoff}"
            assert is_clique(g, res.clique) and len(res.clique) == want


def test_dbk_matches_exact_beyond_bruteforce_guard():
    rng = random.Random(33)
    for i in range(15):
        g = generate_er(rng.randint(26, 30), rng.uniform(0.2, 0.8), 7000 + i)
        want = max_clique_exact(g).size
        res = dbk_solve(g, DbkConfig(cutoff=10, subsolver=exact_subsolver))
        assert res.size == want


def test_dbk_subsolved_graphs_never_exceed_cutoff():
    sizes = []

    def recording_subsolver(g):
        sizes.append(g.n)
        return max_clique_exact(g).clique

    g = generate_er(30, 0.6, 90)
    cutoff = 8
    res = dbk_solve(g, DbkConfig(cutoff=cutoff, subsolver=recording_subsolver))
    assert all(s <= cutoff for s in sizes)
    assert res.subgraph_count == len(sizes)
    assert all(r.size <= cutoff for r in res.records)


def test_dbk_repairs_lying_subsolver():
    # a subsolver that returns non-cliques must not break exactness of the
    # final witness (the result may be suboptimal, but must stay a clique)
    def liar(g):
        return frozenset(g.vertices)

    g = generate_er(16, 0.5, 21)
    res = dbk_solve(g, DbkConfig(cutoff=6, subsolver=liar))
    assert is_clique(g, res.clique)
    assert res.size >= 1


def test_dbk_trace_records():
    g = generate_er(18, 0.55, 3)
    res = dbk_solve(g, DbkConfig(cutoff=6, subsolver=exact_subsolver, record_trace=True))
    assert res.trace, "trace should not be empty for a split run"
    actions = {t["action"] for t in res.trace}
    assert actions <= {"pushed", "solved", "pruned", "clique-shortcut"}
    for t in res.trace:
        assert set(t) >= {"size", "density", "extracted", "action"}
    # without the flag the trace stays empty
    res2 = dbk_solve(g, DbkConfig(cutoff=6, subsolver=exact_subsolver))
    assert res2.trace == []


def test_dbk_proc_time_excludes_subsolver_time():
    import time

    def slow_subsolver(g):
        time.sleep(0.02)
        return max_clique_exact(g).clique

    g = generate_er(20, 0.5, 44)
    res = dbk_solve(g, DbkConfig(cutoff=5, subsolver=slow_subsolver))
    if res.subgraph_count:
        assert res.subsolver_time >= 0.02 * res.subgraph_count
        assert res.dbk_proc_time < res.subsolver_time


def test_dbk_config_validation():
    with pytest.raises(ValueError):
        DbkConfig(cutoff=0, subsolver=exact_subsolver)
