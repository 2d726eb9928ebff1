"""Exact maximum-clique solvers.

``max_clique_exact`` is the production solver: branch-and-bound over bitset
adjacency with greedy-coloring pruning (the classic Tomita scheme behind
fast MC solvers). ``max_clique_bruteforce`` is a deliberately simple
exhaustive enumerator kept as an independent test oracle; it shares no
pruning machinery with the branch-and-bound path.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass

from .graph import Graph, is_clique

BRUTEFORCE_MAX_VERTICES = 25


@dataclass(frozen=True)
class CliqueResult:
    clique: frozenset[int]
    size: int
    wall_time: float

    def __post_init__(self):
        assert self.size == len(self.clique)


def _bit_adjacency(g: Graph, order: list[int]) -> list[int]:
    """Adjacency bitmasks over positions of ``order``."""
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * len(order)
    for u, v in g.edges():
        adj[pos[u]] |= 1 << pos[v]
        adj[pos[v]] |= 1 << pos[u]
    return adj


def max_clique_exact(g: Graph) -> CliqueResult:
    """Maximum clique by branch-and-bound with coloring bounds; deterministic.

    Candidates at every node are greedily colored in index order and expanded
    in decreasing color order; a branch is cut when |current| + color bound
    cannot beat the incumbent. Vertex order is fixed (degree descending,
    smallest id first), so everything except wall_time is reproducible.
    """
    t0 = time.perf_counter()
    if g.n == 0:
        return CliqueResult(frozenset(), 0, time.perf_counter() - t0)

    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    adj = _bit_adjacency(g, order)
    n = len(order)

    best_mask = 0
    best_size = 0
    current: list[int] = []

    def color_sort(cand: int) -> tuple[list[int], list[int]]:
        # greedy coloring of the candidate set; returns vertices grouped by
        # color class (ascending) and the matching 1-based color bounds
        classes: list[int] = []
        ordered: list[int] = []
        bounds: list[int] = []
        rest = cand
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            placed = False
            for ci, cmask in enumerate(classes):
                if cmask & adj[v] == 0:
                    classes[ci] = cmask | (1 << v)
                    placed = True
                    break
            if not placed:
                classes.append(1 << v)
        for ci, cmask in enumerate(classes):
            while cmask:
                v = (cmask & -cmask).bit_length() - 1
                cmask &= cmask - 1
                ordered.append(v)
                bounds.append(ci + 1)
        return ordered, bounds

    def expand(cand: int) -> None:
        nonlocal best_mask, best_size
        ordered, bounds = color_sort(cand)
        for i in range(len(ordered) - 1, -1, -1):
            if len(current) + bounds[i] <= best_size:
                return
            v = ordered[i]
            current.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(nxt)
            elif len(current) > best_size:
                best_size = len(current)
                mask = 0
                for u in current:
                    mask |= 1 << u
                best_mask = mask
            current.pop()
            cand &= ~(1 << v)

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, n + 100))
    try:
        expand((1 << n) - 1)
    finally:
        sys.setrecursionlimit(old_limit)

    clique = frozenset(order[i] for i in range(n) if best_mask >> i & 1)
    assert is_clique(g, clique)
    return CliqueResult(clique, best_size, time.perf_counter() - t0)


def max_clique_bruteforce(g: Graph) -> CliqueResult:
    """Exhaustive oracle: walks every clique of g and keeps the largest.

    Enumerates all cliques by depth-first extension in ascending vertex-id
    order (each clique visited exactly once), with no bounds or coloring, so
    it stays independent of max_clique_exact. Guarded to 25 vertices.
    """
    if g.n > BRUTEFORCE_MAX_VERTICES:
        raise ValueError(
            f"brute force limited to {BRUTEFORCE_MAX_VERTICES} vertices, got {g.n}"
        )
    t0 = time.perf_counter()
    order = list(g.vertices)
    adj = _bit_adjacency(g, order)
    n = len(order)

    best_mask = 0
    best_size = 0

    def walk(mask: int, size: int, cand: int) -> None:
        nonlocal best_mask, best_size
        if size > best_size:
            best_mask, best_size = mask, size
        while cand:
            bit = cand & -cand
            cand &= cand - 1
            v = bit.bit_length() - 1
            walk(mask | bit, size + 1, cand & adj[v])

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, n + 100))
    try:
        walk(0, 0, (1 << n) - 1)
    finally:
        sys.setrecursionlimit(old_limit)

    clique = frozenset(order[i] for i in range(n) if best_mask >> i & 1)
    return CliqueResult(clique, best_size, time.perf_counter() - t0)
