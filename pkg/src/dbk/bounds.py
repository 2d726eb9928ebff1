"""Clique lower/upper bounds and k-core reduction used for pruning.

All bounds are safe: the greedy witness is always a genuine clique, and no
upper bound is ever below the true clique number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph, is_clique


@dataclass(frozen=True)
class BoundReport:
    """Lower/upper clique bounds with the witnessing clique for the lower one."""

    lower: int
    lower_witness: frozenset[int]
    upper: int
    lower_method: str = "greedy-clique"
    upper_method: str = "min(coloring, edge-count, n)"


def k_core(g: Graph, k: int) -> Graph:
    """Maximal induced subgraph in which every vertex has degree >= k.

    Computed by repeatedly pruning low-degree vertices until a fixed point;
    may be empty. k=0 returns the graph unchanged.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return g
    deg = {v: g.degree(v) for v in g.vertices}
    dead = set()
    queue = [v for v in g.vertices if deg[v] < k]
    while queue:
        v = queue.pop()
        if v in dead:
            continue
        dead.add(v)
        for u in g.neighbors(v):
            if u not in dead:
                deg[u] -= 1
                if deg[u] < k:
                    queue.append(u)
    if not dead:
        return g
    verts = tuple(v for v in g.vertices if v not in dead)
    adj = {v: g.neighbors(v) - dead for v in verts}
    m = sum(len(nb) for nb in adj.values()) // 2
    return Graph._build(verts, adj, m)


def greedy_clique_lower_bound(g: Graph) -> frozenset[int]:
    """Clique built by greedy growth; its size is a lower bound on the maximum.

    Starts from the highest-degree vertex and repeatedly adds the
    highest-degree vertex adjacent to everything chosen so far. Degrees are
    taken in g; ties break toward the smallest id, so the result is
    deterministic.
    """
    if g.n == 0:
        return frozenset()
    order_key = lambda v: (-g.degree(v), v)
    start = min(g.vertices, key=order_key)
    chosen = {start}
    candidates = set(g.neighbors(start))
    while candidates:
        v = min(candidates, key=order_key)
        chosen.add(v)
        candidates &= g.neighbors(v)
    return frozenset(chosen)


def greedy_coloring_upper_bound(g: Graph) -> int:
    """Number of colors used by greedy sequential coloring.

    Vertices are colored in largest-degree-first order (smallest-id
    tie-break), each receiving the smallest color unused by its neighbors.
    The count is an upper bound on the clique number.
    """
    color: dict[int, int] = {}
    for v in sorted(g.vertices, key=lambda v: (-g.degree(v), v)):
        used = {color[u] for u in g.neighbors(v) if u in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return max(color.values()) + 1 if color else 0


def edge_count_upper_bound(g: Graph) -> int:
    """Largest k with k*(k-1)/2 <= |E|: a clique of size k needs that many edges."""
    if g.n == 0:
        return 0
    m = g.num_edges
    return (1 + math.isqrt(8 * m + 1)) // 2


def upper_bound(g: Graph) -> int:
    """Best available cheap upper bound on the clique number."""
    if g.n == 0:
        return 0
    return min(greedy_coloring_upper_bound(g), edge_count_upper_bound(g), g.n)


def bound_report(g: Graph) -> BoundReport:
    witness = greedy_clique_lower_bound(g)
    assert is_clique(g, witness)
    return BoundReport(lower=len(witness), lower_witness=witness, upper=upper_bound(g))
