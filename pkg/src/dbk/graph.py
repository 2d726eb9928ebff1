"""Immutable undirected simple graphs and the elementary operations on them.

Vertex ids are non-negative integers and are *stable*: a vertex keeps its id
in every derived graph (subgraph, complement, vertex removal), so a clique
found deep inside a decomposition can always be reported in the coordinates
of the graph it originally came from.
"""

from __future__ import annotations

import json
import random
from collections import deque
from operator import index as _as_int
from typing import Iterable, Iterator

MAX_CONNECTIVITY_RETRIES = 1000


class Graph:
    """Undirected simple graph: no self-loops, no parallel edges.

    Instances are immutable after construction and safe to share between
    concurrent workers.
    """

    __slots__ = ("_vertices", "_adj", "_num_edges")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        vset = set()
        for v in vertices:
            v = _as_int(v)
            if v < 0:
                raise ValueError(f"vertex ids must be non-negative, got {v}")
            vset.add(v)
        adj: dict[int, set[int]] = {v: set() for v in vset}
        m = 0
        for u, v in edges:
            u, v = _as_int(u), _as_int(v)
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            if v not in adj[u]:
                adj[u].add(v)
                adj[v].add(u)
                m += 1
        self._vertices: tuple[int, ...] = tuple(sorted(vset))
        self._adj: dict[int, frozenset[int]] = {v: frozenset(adj[v]) for v in self._vertices}
        self._num_edges = m

    @classmethod
    def _build(cls, vertices: tuple[int, ...], adj: dict[int, frozenset[int]], num_edges: int) -> "Graph":
        """Trusted constructor for internally derived graphs (skips validation)."""
        g = object.__new__(cls)
        g._vertices = vertices
        g._adj = adj
        g._num_edges = num_edges
        return g

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return self._num_edges

    @property
    def density(self) -> float:
        n = self.n
        if n < 2:
            return 0.0
        return 2.0 * self._num_edges / (n * (n - 1))

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise ValueError(f"vertex {v} not in graph") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, in sorted order."""
        for u in self._vertices:
            for v in sorted(self._adj[u]):
                if v > u:
                    yield (u, v)

    def is_complete(self) -> bool:
        n = self.n
        return self._num_edges == n * (n - 1) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._num_edges})"

    # --- serialization -------------------------------------------------

    def _require_canonical(self) -> None:
        if self._vertices != tuple(range(self.n)):
            raise ValueError(
                "serialization requires contiguous vertex ids 0..n-1; relabel first"
            )

    def to_json_dict(self) -> dict:
        """JSON form ``{"n": ..., "edges": [[u, v], ...]}`` with 0-indexed ids."""
        self._require_canonical()
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Graph":
        return cls(range(data["n"]), [tuple(e) for e in data["edges"]])

    def to_dimacs(self) -> str:
        """DIMACS ascii form ("p edge n m" header, 1-indexed "e u v" lines)."""
        self._require_canonical()
        lines = [f"p edge {self.n} {self._num_edges}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dimacs(cls, text: str) -> "Graph":
        n = None
        edges: list[tuple[int, int]] = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("c"):
                continue
            parts = line.split()
            if parts[0] == "p":
                # accepts both "p edge n m" and the common "p col n m" variant
                n = int(parts[2])
            elif parts[0] == "e":
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        if n is None:
            raise ValueError("DIMACS input has no 'p' line")
        return cls(range(n), edges)


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    verts = g.vertices
    vset = frozenset(verts)
    adj = {v: vset - g.neighbors(v) - {v} for v in verts}
    m = (g.n * (g.n - 1)) // 2 - g.num_edges
    return Graph._build(verts, adj, m)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by vertex set ``s``; ids are preserved."""
    sset = frozenset(s)
    if not sset <= frozenset(g.vertices):
        raise ValueError("vertex set is not a subset of the graph's vertices")
    adj = {v: g.neighbors(v) & sset for v in sorted(sset)}
    m = sum(len(nb) for nb in adj.values()) // 2
    return Graph._build(tuple(sorted(sset)), adj, m)


def remove_vertex(g: Graph, v: int) -> Graph:
    """Graph with ``v`` and all incident edges removed."""
    if v not in g:
        raise ValueError(f"vertex {v} not in graph")
    verts = tuple(u for u in g.vertices if u != v)
    adj = {u: g.neighbors(u) - {v} for u in verts}
    m = g.num_edges - g.degree(v)
    return Graph._build(verts, adj, m)


def lowest_degree_vertex(g: Graph) -> int:
    """Vertex of minimum degree; ties broken by smallest id."""
    if g.n == 0:
        raise ValueError("graph is empty")
    return min(g.vertices, key=lambda v: (g.degree(v), v))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    """True iff every distinct pair in ``s`` is an edge of g."""
    sset = frozenset(s)
    if not sset <= frozenset(g.vertices):
        raise ValueError("vertex set is not a subset of the graph's vertices")
    for v in sset:
        if not (sset - {v}) <= g.neighbors(v):
            return False
    return True


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    start = g.vertices[0]
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def generate_er(n: int, density: float, seed: int, require_connected: bool = False) -> Graph:
    """Erdos-Renyi G(n, p) graph, deterministic given (n, density, seed).

    Each of the n*(n-1)/2 possible edges is included independently with
    probability ``density``, drawn from ``random.Random(seed)`` (Mersenne
    Twister, bit-stable across platforms) in fixed (i, j) order with i < j.

    With ``require_connected``, disconnected draws are regenerated with
    successor seeds (seed+1, seed+2, ...) up to MAX_CONNECTIVITY_RETRIES
    attempts before raising RuntimeError.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {density}")

    attempt_seed = seed
    for _ in range(MAX_CONNECTIVITY_RETRIES):
        rng = random.Random(attempt_seed)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < density
        ]
        g = Graph(range(n), edges)
        if not require_connected or is_connected(g):
            return g
        attempt_seed += 1
    raise RuntimeError(
        f"no connected graph found for n={n}, density={density} after "
        f"{MAX_CONNECTIVITY_RETRIES} seeds starting from {seed} (seed exhaustion)"
    )


def save_graph(g: Graph, path: str) -> None:
    """Write DIMACS (default) or JSON when the path ends in .json."""
    if str(path).endswith(".json"):
        text = json.dumps(g.to_json_dict(), sort_keys=True) + "\n"
    else:
        text = g.to_dimacs()
    with open(path, "w") as fh:
        fh.write(text)


def load_graph(path: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    if str(path).endswith(".json"):
        return Graph.from_json_dict(json.loads(text))
    return Graph.from_dimacs(text)
