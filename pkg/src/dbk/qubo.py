"""Maximum-clique QUBO construction, energy evaluation, and sample repair.

The clique QUBO places -A on every vertex and +B on every complement-graph
edge; with A < B its ground states are exactly the maximum cliques, at
energy -A * (clique number). A and B default to the integers 1 and 2 so
ground-state energy comparisons stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .graph import Graph, complement, is_clique


def _norm_pair(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise ValueError(f"quadratic term on identical ids ({u}, {v})")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Qubo:
    """Sparse QUBO: sum a_i x_i + sum a_ij x_i x_j over binary x."""

    linear: dict[int, float]
    quadratic: dict[tuple[int, int], float]

    def __post_init__(self):
        fixed = {}
        for (u, v), c in self.quadratic.items():
            key = _norm_pair(u, v)
            if key in fixed:
                raise ValueError(f"duplicate quadratic pair {key}")
            fixed[key] = c
        object.__setattr__(self, "quadratic", fixed)

    @property
    def variables(self) -> frozenset[int]:
        vs = set(self.linear)
        for u, v in self.quadratic:
            vs.add(u)
            vs.add(v)
        return frozenset(vs)

    def to_json_dict(self) -> dict:
        return {
            "linear": {str(i): c for i, c in sorted(self.linear.items())},
            "quadratic": [[u, v, c] for (u, v), c in sorted(self.quadratic.items())],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Qubo":
        return cls(
            linear={int(i): c for i, c in data["linear"].items()},
            quadratic={(u, v): c for u, v, c in data["quadratic"]},
        )


@dataclass(frozen=True)
class Ising:
    """Spin form of a Qubo: sum h_i s_i + sum J_ij s_i s_j, s in {-1,+1}.

    ``offset`` is the constant picked up by the x = (s+1)/2 substitution:
    qubo energy = ising energy + offset for corresponding assignments.
    """

    linear: dict[int, float]
    quadratic: dict[tuple[int, int], float]
    offset: float = 0.0

    @property
    def variables(self) -> frozenset[int]:
        vs = set(self.linear)
        for u, v in self.quadratic:
            vs.add(u)
            vs.add(v)
        return frozenset(vs)


def build_mc_qubo(g: Graph, a: float = 1, b: float = 2) -> Qubo:
    """Maximum-clique QUBO for g: -a per vertex, +b per complement edge.

    Requires 0 < a < b, otherwise maximizing selected vertices could beat
    paying a conflict penalty and ground states would stop being cliques.
    """
    if not (a > 0 and b > 0):
        raise ValueError("A and B must be positive")
    if a >= b:
        raise ValueError(f"A < B required, got A={a}, B={b}")
    linear = {v: -a for v in g.vertices}
    quadratic = {e: b for e in complement(g).edges()}
    return Qubo(linear=linear, quadratic=quadratic)


def energy(q: Qubo, x: Mapping[int, int]) -> float:
    """QUBO energy of a total binary assignment."""
    missing = q.variables - set(x)
    if missing:
        raise ValueError(f"assignment misses variables {sorted(missing)}")
    e = sum(c * x[i] for i, c in q.linear.items())
    e += sum(c * x[u] * x[v] for (u, v), c in q.quadratic.items())
    return e


def ising_energy(isg: Ising, s: Mapping[int, int]) -> float:
    """Ising energy of a total spin assignment (offset NOT included)."""
    missing = isg.variables - set(s)
    if missing:
        raise ValueError(f"assignment misses variables {sorted(missing)}")
    e = sum(h * s[i] for i, h in isg.linear.items())
    e += sum(j * s[u] * s[v] for (u, v), j in isg.quadratic.items())
    return e


def qubo_to_ising(q: Qubo) -> Ising:
    """Substitute x = (s+1)/2; energies match up to the recorded offset."""
    h: dict[int, float] = {i: 0.0 for i in q.variables}
    j: dict[tuple[int, int], float] = {}
    offset = 0.0
    for i, a in q.linear.items():
        h[i] += a / 2
        offset += a / 2
    for (u, v), a in q.quadratic.items():
        j[(u, v)] = a / 4
        h[u] += a / 4
        h[v] += a / 4
        offset += a / 4
    return Ising(linear=h, quadratic=j, offset=offset)


def extract_clique(g: Graph, x: Mapping[int, int]) -> frozenset[int]:
    """Turn a raw sampler assignment into a valid clique of g.

    Repair: while the selected set is not a clique, drop the member with the
    most missing adjacencies inside it (smallest-id tie-break). Extend: then
    greedily add vertices adjacent to everything kept, highest-degree-first
    (smallest-id tie-break). The result always satisfies is_clique.
    """
    s = {v for v in g.vertices if x.get(v, 0)}
    while True:
        worst = None
        worst_missing = 0
        for v in sorted(s):
            missing = len(s) - 1 - len(g.neighbors(v) & s)
            if missing > worst_missing:
                worst, worst_missing = v, missing
        if worst is None:
            break
        s.discard(worst)
    # greedy extension; never leaves a non-empty graph with the empty set
    order_key = lambda v: (-g.degree(v), v)
    while True:
        candidates = [v for v in g.vertices if v not in s and s <= g.neighbors(v)]
        if not candidates:
            break
        s.add(min(candidates, key=order_key))
    result = frozenset(s)
    assert is_clique(g, result)
    return result
