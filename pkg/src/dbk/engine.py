"""DBK decomposition engine: recursive vertex splitting with bound pruning
and k-core reduction, parameterized over a maximum-clique subsolver.

Splitting a graph at vertex v yields two strictly smaller children: the
subgraph induced by v's neighborhood (any clique there extends with v) and
the graph with v deleted (covers cliques avoiding v). Tracking the split
vertices accumulated along a branch ("extracted") lets every child clique be
lifted back to a clique of the original input, so the engine is exact
whenever its subsolver is.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .bounds import greedy_clique_lower_bound, k_core, upper_bound
from .graph import Graph, induced_subgraph, is_clique, lowest_degree_vertex, remove_vertex
from .qubo import extract_clique

logger = logging.getLogger(__name__)

Subsolver = Callable[[Graph], Iterable[int]]


@dataclass(frozen=True)
class SubProblem:
    """A working graph plus the split vertices accumulated on its branch.

    Invariant: ``extracted`` united with any clique of ``graph`` is a clique
    of the original input, and all ids are original-graph ids.
    """

    graph: Graph
    extracted: frozenset[int]

    @property
    def offset(self) -> int:
        return len(self.extracted)


@dataclass
class DbkConfig:
    cutoff: int
    subsolver: Subsolver
    record_trace: bool = False

    def __post_init__(self):
        if self.cutoff < 1:
            raise ValueError("cutoff must be >= 1")


@dataclass(frozen=True)
class SubgraphRecord:
    """One subsolver invocation: what was solved and what came back."""

    size: int
    density: float
    extracted: int
    found_size: int
    solver_wall_time: float


@dataclass
class DbkResult:
    clique: frozenset[int]
    size: int
    subgraph_count: int
    records: list[SubgraphRecord]
    dbk_proc_time: float
    subsolver_time: float
    trace: list[dict] = field(default_factory=list)


def split(p: SubProblem, v: int) -> tuple[SubProblem, SubProblem]:
    """Partition at v: (neighborhood subgraph with v extracted, graph minus v)."""
    if v not in p.graph:
        raise ValueError(f"vertex {v} not in subproblem graph")
    take = SubProblem(induced_subgraph(p.graph, p.graph.neighbors(v)), p.extracted | {v})
    leave = SubProblem(remove_vertex(p.graph, v), p.extracted)
    assert take.graph.n < p.graph.n and leave.graph.n < p.graph.n
    return take, leave


def dbk_solve(g: Graph, cfg: DbkConfig) -> DbkResult:
    """Run the decomposition to completion and return a maximum clique.

    Subproblems larger than the cutoff are split further (LIFO, so depth
    first) at their lowest-degree vertex. Every child is first reduced to
    its offset-adjusted k-core, used to update the incumbent via a greedy
    lower bound, and then either pushed, solved directly when it is already
    a complete graph, handed to the subsolver when its upper bound can still
    beat the incumbent, or pruned. ``dbk_proc_time`` covers the engine's own
    work only; subsolver time is accounted separately.
    """
    t_start = time.perf_counter()
    subsolver_time = 0.0
    records: list[SubgraphRecord] = []
    trace: list[dict] = []

    best: frozenset[int] = greedy_clique_lower_bound(g)
    k = len(best)
    stack: list[SubProblem] = []

    def note(action: str, sub: SubProblem, wall: float | None = None) -> None:
        if cfg.record_trace:
            rec = {
                "size": sub.graph.n,
                "density": sub.graph.density,
                "extracted": sub.offset,
                "action": action,
            }
            if wall is not None:
                rec["wall_time"] = wall
            trace.append(rec)

    def admit(sub: SubProblem) -> None:
        """Reduce a child and route it: push / clique shortcut / solve / prune."""
        nonlocal k, best, subsolver_time
        core = k_core(sub.graph, max(k - sub.offset, 0))
        sub = SubProblem(core, sub.extracted)

        lb = greedy_clique_lower_bound(core)
        if len(lb) + sub.offset > k:
            k = len(lb) + sub.offset
            best = lb | sub.extracted

        if core.n > cfg.cutoff:
            stack.append(sub)
            note("pushed", sub)
            return
        if core.is_complete():
            # a complete subgraph needs no solver; its whole vertex set lifts
            if core.n + sub.offset > k:
                k = core.n + sub.offset
                best = frozenset(core.vertices) | sub.extracted
            note("clique-shortcut", sub)
            return
        if upper_bound(core) + sub.offset > k:
            t0 = time.perf_counter()
            raw = frozenset(cfg.subsolver(core))
            wall = time.perf_counter() - t0
            subsolver_time += wall
            if not (raw <= frozenset(core.vertices)) or not is_clique(core, raw):
                logger.warning(
                    "subsolver returned a non-clique on %d vertices; repairing", core.n
                )
                support = {v: 1 if v in raw else 0 for v in core.vertices}
                raw = extract_clique(core, support)
            records.append(
                SubgraphRecord(
                    size=core.n,
                    density=core.density,
                    extracted=sub.offset,
                    found_size=len(raw),
                    solver_wall_time=wall,
                )
            )
            note("solved", sub, wall)
            if len(raw) + sub.offset > k:
                k = len(raw) + sub.offset
                best = raw | sub.extracted
        else:
            note("pruned", sub)

    admit(SubProblem(g, frozenset()))
    while stack:
        sub = stack.pop()
        v = lowest_degree_vertex(sub.graph)
        for child in split(sub, v):
            admit(child)

    wall_total = time.perf_counter() - t_start
    assert is_clique(g, best) and len(best) == k
    return DbkResult(
        clique=best,
        size=k,
        subgraph_count=len(records),
        records=records,
        dbk_proc_time=wall_total - subsolver_time,
        subsolver_time=subsolver_time,
        trace=trace,
    )
