"""Vertex-connectivity solvers: global, pair, source, sink, Steiner, all-pairs.

Undirected variants run directly on s-t vertex cuts.  Every directed variant
is available two ways:

``Via.REDUCTION``
    build the reduced undirected graph, call the undirected solver on it
    as a black box, subtract ``w(V)`` and map the cut back.
``Via.DIRECT``
    s-t vertex cuts on the digraph itself.

Global solvers use a pivot sweep.  For a pivot ``p`` and a minimum cut
``(L, S, R)``: if ``p`` is on a side, some pair ``(p, t)`` or ``(s, p)``
crosses the cut; otherwise ``p`` is in ``S`` and, weights being positive,
``p`` has an in-neighbour in ``L`` and an out-neighbour in ``R`` (else it
could move to a side), so some non-adjacent neighbour pair crosses it.
Any pivot is exact; we pick the one needing the fewest flow calls.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

from .errors import CompleteGraph, SamePair, TerminalSetTooSmall, VertexOutOfRange
from .flow import VertexCutSolver
from .graph import (
    NO_CUT,
    CutValue,
    DirectedGraph,
    Graph,
    UndirectedGraph,
    VertexCut,
    validate_cut,
    weight_of,
)
from .reduction import (
    NormalizedCut,
    ReducedGraph,
    build_reduction,
    extract_directed_cut,
    normalize_cut,
)


class Via(str, Enum):
    REDUCTION = "reduction"
    DIRECT = "direct"


KINDS = ("global", "pair", "source", "sink", "steiner", "all-pairs")


@dataclass(frozen=True)
class VariantQuery:
    kind: str
    s: int | None = None
    t: int | None = None
    terminals: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "terminals", frozenset(self.terminals))
        if self.kind not in KINDS:
            raise ValueError(f"unknown variant {self.kind!r}")
        if self.kind == "pair" and self.s == self.t:
            raise SamePair(f"source and sink are both {self.s}")
        if self.kind == "steiner" and len(self.terminals) < 2:
            raise TerminalSetTooSmall(f"need at least 2 terminals, got {len(self.terminals)}")

    def vertices(self) -> set[int]:
        return {v for v in (self.s, self.t) if v is not None} | set(self.terminals)


@dataclass(frozen=True)
class Solution:
    value: CutValue
    cut: VertexCut | None = None
    # Normalized cut of the reduced graph the answer was extracted from.
    certificate: NormalizedCut | None = None


@dataclass
class SolveStats:
    pair_queries: int = 0
    flow_calls: int = 0
    flow_seconds: float = 0.0
    build_seconds: float = 0.0
    reduction_seconds: float = 0.0
    network_nodes: int = 0
    network_arcs: int = 0

    def absorb(self, solver: VertexCutSolver) -> None:
        self.pair_queries += solver.queries
        self.flow_calls += solver.calls
        self.flow_seconds += solver.flow_seconds
        self.build_seconds += solver.build_seconds
        self.network_nodes = max(self.network_nodes, solver.network.node_count)
        self.network_arcs = max(self.network_arcs, solver.network.arc_count)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _check_vertex(g: Graph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} outside [0, {g.n})")


def _sweep(solver: VertexCutSolver, pairs: Iterable[tuple[int, int]]) -> Solution:
    """Minimum over ``pairs`` with a witness; first pair wins ties."""
    best: CutValue = NO_CUT
    best_pair = None
    prune = solver.backend == "dinic"
    for s, t in pairs:
        limit = best if prune and best != NO_CUT else None
        value = solver.value(s, t, limit=limit)
        if value < best:
            best, best_pair = value, (s, t)
    if best_pair is None:
        return Solution(NO_CUT)
    res = solver.cut(*best_pair)
    assert res.value == best, (res.value, best)
    return Solution(res.value, res.cut)


# -- undirected --------------------------------------------------------------

def _undirected_pivot_pairs(g: UndirectedGraph) -> list[tuple[int, int]]:
    bits = g.adj_bits
    best_key, pivot = None, 0
    for p in range(g.n):
        nb = bits[p]
        cost = (g.n - 1 - len(g.adj[p])) + sum(
            _popcount(nb & ~bits[u] & ~(1 << u)) for u in g.adj[p]) // 2
        key = (cost, weight_of(g, g.adj[p]), p)
        if best_key is None or key < best_key:
            best_key, pivot = key, p
    pairs = [(pivot, t) for t in range(g.n) if t != pivot and t not in g.adj[pivot]]
    nbrs = sorted(g.adj[pivot])
    pairs += [(u, v) for u, v in combinations(nbrs, 2) if v not in g.adj[u]]
    return pairs


def undirected_global(g: UndirectedGraph, backend: str = "dinic",
                      solver: VertexCutSolver | None = None,
                      stats: SolveStats | None = None) -> Solution:
    """Minimum-weight vertex cut of a non-complete undirected graph."""
    if g.is_complete():
        raise CompleteGraph("a complete graph has no vertex cut")
    own = solver is None
    solver = solver or VertexCutSolver(g, backend)
    sol = _sweep(solver, _undirected_pivot_pairs(g))
    if own and stats is not None:
        stats.absorb(solver)
    return sol


def undirected_pair(g: UndirectedGraph, s: int, t: int,
                    solver: VertexCutSolver | None = None) -> Solution:
    _check_vertex(g, s, t)
    if s == t:
        raise SamePair(f"source and sink are both {s}")
    res = (solver or VertexCutSolver(g)).cut(s, t)
    return Solution(res.value, res.cut)


def undirected_source(g: UndirectedGraph, v: int, backend: str = "dinic",
                      solver: VertexCutSolver | None = None) -> Solution:
    """Cheapest cut with ``v`` on one side; NO_CUT if ``v`` dominates."""
    _check_vertex(g, v)
    solver = solver or VertexCutSolver(g, backend)
    return _sweep(solver, ((v, t) for t in range(g.n) if t != v and t not in g.adj[v]))


def undirected_steiner(g: UndirectedGraph, terminals: Iterable[int], backend: str = "dinic",
                       solver: VertexCutSolver | None = None) -> Solution:
    terms = sorted(set(terminals))
    if len(terms) < 2:
        raise TerminalSetTooSmall(f"need at least 2 terminals, got {len(terms)}")
    _check_vertex(g, *terms)
    solver = solver or VertexCutSolver(g, backend)
    return _sweep(solver, ((s, t) for s, t in combinations(terms, 2) if not g.has_edge(s, t)))


# -- directed ----------------------------------------------------------------

class _Reduced:
    """Reduced graph plus one flow solver shared by all queries on it."""

    def __init__(self, g: DirectedGraph, backend: str, stats: SolveStats | None):
        started = time.perf_counter()
        self.r: ReducedGraph = build_reduction(g)
        if stats is not None:
            stats.reduction_seconds += time.perf_counter() - started
        self.solver = VertexCutSolver(self.r.graph, backend)
        self.stats = stats

    def back(self, sol: Solution) -> Solution:
        """Shift an undirected answer on the reduced graph back to the digraph."""
        if sol.value == NO_CUT:
            return Solution(NO_CUT)
        cert = normalize_cut(self.r, sol.cut)
        cut = extract_directed_cut(self.r, cert)
        value = sol.value - self.r.total_weight
        assert weight_of(self.r.source, cut.separator) == value
        return Solution(value, cut, cert)

    def done(self) -> None:
        if self.stats is not None:
            self.stats.absorb(self.solver)


def _directed_pivot_pairs(g: DirectedGraph) -> list[tuple[int, int]]:
    out_bits = g.out_bits
    best_key, pivot = None, 0
    for p in range(g.n):
        cost = (2 * (g.n - 1) - len(g.out_adj[p]) - len(g.in_adj[p])) + sum(
            _popcount(out_bits[p] & ~out_bits[u] & ~(1 << u)) for u in g.in_adj[p])
        key = (cost, weight_of(g, g.out_adj[p] | g.in_adj[p]), p)
        if best_key is None or key < best_key:
            best_key, pivot = key, p
    p = pivot
    pairs = [(p, t) for t in range(g.n) if not g.adjacent(p, t)]
    pairs += [(s, p) for s in range(g.n) if not g.adjacent(s, p)]
    pairs += [(u, v) for u in sorted(g.in_adj[p]) for v in sorted(g.out_adj[p])
              if not g.adjacent(u, v)]
    return pairs


def directed_global(g: DirectedGraph, via: Via = Via.REDUCTION, backend: str = "dinic",
                    stats: SolveStats | None = None) -> Solution:
    """Minimum-weight directed vertex cut of a non-complete digraph."""
    if g.is_complete():
        raise CompleteGraph("every ordered pair is an arc; no vertex cut exists")
    if Via(via) is Via.REDUCTION:
        red = _Reduced(g, backend, stats)
        sol = red.back(undirected_global(red.r.graph, solver=red.solver))
        red.done()
        return sol
    solver = VertexCutSolver(g, backend)
    sol = _sweep(solver, _directed_pivot_pairs(g))
    if stats is not None:
        stats.absorb(solver)
    return sol


def directed_pair(g: DirectedGraph, s: int, t: int, via: Via = Via.REDUCTION,
                  backend: str = "dinic", stats: SolveStats | None = None) -> Solution:
    _check_vertex(g, s, t)
    if s == t:
        raise SamePair(f"source and sink are both {s}")
    if Via(via) is Via.REDUCTION:
        red = _Reduced(g, backend, stats)
        sol = red.back(undirected_pair(red.r.graph, red.r.out_copy(s), red.r.in_copy(t),
                                       solver=red.solver))
        red.done()
        return sol
    solver = VertexCutSolver(g, backend)
    res = solver.cut(s, t)
    if stats is not None:
        stats.absorb(solver)
    return Solution(res.value, res.cut)


def directed_source(g: DirectedGraph, s: int, via: Via = Via.REDUCTION,
                    backend: str = "dinic", stats: SolveStats | None = None) -> Solution:
    """Cheapest cut with ``s`` on the left; NO_CUT if ``s`` has arcs to every vertex."""
    _check_vertex(g, s)
    if Via(via) is Via.REDUCTION:
        red = _Reduced(g, backend, stats)
        sol = red.back(undirected_source(red.r.graph, red.r.out_copy(s), solver=red.solver))
        red.done()
        return sol
    solver = VertexCutSolver(g, backend)
    sol = _sweep(solver, ((s, t) for t in range(g.n) if not g.adjacent(s, t)))
    if stats is not None:
        stats.absorb(solver)
    return sol


def directed_sink(g: DirectedGraph, t: int, via: Via = Via.REDUCTION,
                  backend: str = "dinic", stats: SolveStats | None = None) -> Solution:
    """Cheapest cut with ``t`` on the right; NO_CUT if every vertex has an arc to ``t``."""
    _check_vertex(g, t)
    if Via(via) is Via.REDUCTION:
        red = _Reduced(g, backend, stats)
        sol = red.back(undirected_source(red.r.graph, red.r.in_copy(t), solver=red.solver))
        red.done()
        return sol
    solver = VertexCutSolver(g, backend)
    sol = _sweep(solver, ((s, t) for s in range(g.n) if not g.adjacent(s, t)))
    if stats is not None:
        stats.absorb(solver)
    return sol


def directed_steiner(g: DirectedGraph, terminals: Iterable[int], via: Via = Via.REDUCTION,
                     backend: str = "dinic", stats: SolveStats | None = None) -> Solution:
    terms = sorted(set(terminals))
    if len(terms) < 2:
        raise TerminalSetTooSmall(f"need at least 2 terminals, got {len(terms)}")
    _check_vertex(g, *terms)
    if Via(via) is Via.REDUCTION:
        red = _Reduced(g, backend, stats)
        doubled = [red.r.out_copy(v) for v in terms] + [red.r.in_copy(v) for v in terms]
        assert len(set(doubled)) == 2 * len(terms)
        sol = red.back(undirected_steiner(red.r.graph, doubled, solver=red.solver))
        red.done()
        return sol
    solver = VertexCutSolver(g, backend)
    sol = _sweep(solver, ((s, t) for s in terms for t in terms if not g.adjacent(s, t)))
    if stats is not None:
        stats.absorb(solver)
    return sol


def directed_all_pairs(g: DirectedGraph, via: Via = Via.REDUCTION, backend: str = "dinic",
                       stats: SolveStats | None = None) -> list[list[CutValue]]:
    """``n x n`` matrix of pair values; NO_CUT on the diagonal and on arcs."""
    n = g.n
    if Via(via) is Via.REDUCTION:
        red = _Reduced(g, backend, stats)
        shift = red.r.total_weight
        matrix = [[NO_CUT if s == t else
                   red.solver.value(red.r.out_copy(s), red.r.in_copy(t)) - shift
                   for t in range(n)] for s in range(n)]
        red.done()
        return matrix
    solver = VertexCutSolver(g, backend)
    matrix = [[NO_CUT if s == t else solver.value(s, t) for t in range(n)] for s in range(n)]
    if stats is not None:
        stats.absorb(solver)
    return matrix


def undirected_all_pairs(g: UndirectedGraph, backend: str = "dinic",
                         stats: SolveStats | None = None) -> list[list[CutValue]]:
    solver = VertexCutSolver(g, backend)
    n = g.n
    matrix: list[list[CutValue]] = [[NO_CUT] * n for _ in range(n)]
    for s, t in combinations(range(n), 2):
        matrix[s][t] = matrix[t][s] = solver.value(s, t)
    if stats is not None:
        stats.absorb(solver)
    return matrix


def solve(g: Graph, query: VariantQuery, via: Via = Via.REDUCTION, backend: str = "dinic",
          stats: SolveStats | None = None):
    """Dispatch a query; returns a :class:`Solution` or, for all-pairs, a matrix.

    Undirected graphs ignore ``via``: there is nothing to reduce.
    """
    _check_vertex(g, *query.vertices())
    kind = query.kind
    if g.directed:
        if kind == "global":
            return directed_global(g, via, backend, stats)
        if kind == "pair":
            return directed_pair(g, query.s, query.t, via, backend, stats)
        if kind == "source":
            return directed_source(g, query.s, via, backend, stats)
        if kind == "sink":
            return directed_sink(g, query.t, via, backend, stats)
        if kind == "steiner":
            return directed_steiner(g, query.terminals, via, backend, stats)
        return directed_all_pairs(g, via, backend, stats)

    if kind == "all-pairs":
        return undirected_all_pairs(g, backend, stats)
    solver = VertexCutSolver(g, backend)
    if kind == "global":
        sol = undirected_global(g, solver=solver)
    elif kind == "pair":
        sol = undirected_pair(g, query.s, query.t, solver=solver)
    elif kind in ("source", "sink"):
        sol = undirected_source(g, query.s if kind == "source" else query.t, solver=solver)
    else:
        sol = undirected_steiner(g, query.terminals, solver=solver)
    if stats is not None:
        stats.absorb(solver)
    return sol


def check_solution(g: Graph, sol: Solution, reduced: ReducedGraph | None = None) -> None:
    """Assert the invariants every returned :class:`Solution` must satisfy."""
    if sol.value == NO_CUT:
        assert sol.cut is None and sol.certificate is None
        return
    assert sol.cut is not None
    validate_cut(g, sol.cut)
    assert weight_of(g, sol.cut.separator) == sol.value
    if sol.certificate is not None:
        reduced = reduced or build_reduction(g)
        validate_cut(reduced.graph, sol.certificate.cut)
        assert extract_directed_cut(reduced, sol.certificate) == sol.cut
