"""Vertex-weighted graphs, vertex cuts and basic connectivity predicates.

Vertices are dense integers ``0..n-1``.  Weights are positive integers.
Graphs are immutable once constructed and validate themselves on
construction, so any ``DirectedGraph`` or ``UndirectedGraph`` instance
already satisfies the invariants checked by :func:`validate_directed`.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Union

from .errors import (
    CompleteGraph,
    CrossingEdge,
    DuplicateArc,
    EmptySide,
    GraphError,
    NonPositiveWeight,
    NotTriPartition,
    SelfLoop,
    VertexOutOfRange,
    WeightTooLarge,
)

#: Value reported when two vertices cannot be separated (equal or adjacent).
NO_CUT = math.inf

#: A finite cut weight (``int``) or :data:`NO_CUT`.
CutValue = Union[int, float]

# Sums over both copies of V in the reduced graph must stay below 2**63.
WEIGHT_BOUND = 2**62


def _check_weights(n: int, weights: tuple) -> None:
    if n < 1:
        raise GraphError(f"graph must have at least one vertex, got n={n}")
    if len(weights) != n:
        raise GraphError(f"expected {n} weights, got {len(weights)}")
    for v, w in enumerate(weights):
        if not isinstance(w, int) or isinstance(w, bool):
            raise NonPositiveWeight(f"weight of vertex {v} is not an integer: {w!r}")
        if w < 1:
            raise NonPositiveWeight(f"weight of vertex {v} is {w}, must be >= 1")
    if n * max(weights) >= WEIGHT_BOUND:
        raise WeightTooLarge(f"n * max weight must be < 2**62 (n={n}, max={max(weights)})")


def _check_pairs(n: int, pairs: tuple, directed: bool) -> None:
    seen = set()
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"pair ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateArc(f"duplicate {'arc' if directed else 'edge'} ({u}, {v})")
        seen.add(key)


def _bits(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class DirectedGraph:
    """Simple vertex-weighted digraph.

    ``arcs`` keeps the order it was given in; equality ignores that order.
    """

    directed = True

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = (), weights: Iterable[int] | None = None):
        self.n = n
        self.arcs = tuple((int(u), int(v)) for u, v in arcs)
        self.weights = tuple(weights) if weights is not None else (1,) * n
        _check_weights(n, self.weights)
        _check_pairs(n, self.arcs, directed=True)
        self.arc_set = frozenset(self.arcs)
        out_adj: list[set[int]] = [set() for _ in range(n)]
        in_adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.arcs:
            out_adj[u].add(v)
            in_adj[v].add(u)
        self.out_adj = tuple(frozenset(s) for s in out_adj)
        self.in_adj = tuple(frozenset(s) for s in in_adj)

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arc_set

    def adjacent(self, u: int, v: int) -> bool:
        """True if the ordered pair (u, v) cannot be separated."""
        return u == v or (u, v) in self.arc_set

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1)

    @cached_property
    def out_bits(self) -> tuple[int, ...]:
        return tuple(_bits(s) for s in self.out_adj)

    @cached_property
    def in_bits(self) -> tuple[int, ...]:
        return tuple(_bits(s) for s in self.in_adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return (self.n, self.arc_set, self.weights) == (other.n, other.arc_set, other.weights)

    def __hash__(self) -> int:
        return hash((self.n, self.arc_set, self.weights))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, m={self.m})"


class UndirectedGraph:
    """Simple vertex-weighted undirected graph.

    Edges are stored as ``(min, max)`` pairs in the order given.
    """

    directed = False

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), weights: Iterable[int] | None = None):
        self.n = n
        raw = tuple((int(u), int(v)) for u, v in edges)
        self.weights = tuple(weights) if weights is not None else (1,) * n
        _check_weights(n, self.weights)
        _check_pairs(n, raw, directed=False)
        self.edges = tuple((min(u, v), max(u, v)) for u, v in raw)
        self.edge_set = frozenset(self.edges)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self.adj = tuple(frozenset(s) for s in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def adjacent(self, u: int, v: int) -> bool:
        return u == v or self.has_edge(u, v)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    # Undirected graphs expose the same neighbor views as digraphs so that
    # flow networks and the oracle can treat both uniformly.
    @property
    def out_adj(self) -> tuple[frozenset[int], ...]:
        return self.adj

    @property
    def in_adj(self) -> tuple[frozenset[int], ...]:
        return self.adj

    @cached_property
    def adj_bits(self) -> tuple[int, ...]:
        return tuple(_bits(s) for s in self.adj)

    @property
    def out_bits(self) -> tuple[int, ...]:
        return self.adj_bits

    @property
    def in_bits(self) -> tuple[int, ...]:
        return self.adj_bits

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return (self.n, self.edge_set, self.weights) == (other.n, other.edge_set, other.weights)

    def __hash__(self) -> int:
        return hash((self.n, self.edge_set, self.weights))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, m={self.m})"


Graph = Union[DirectedGraph, UndirectedGraph]


@dataclass(frozen=True)
class VertexCut:
    """A tri-partition ``(left, separator, right)`` of the vertex set."""

    left: frozenset[int]
    separator: frozenset[int]
    right: frozenset[int]

    def __post_init__(self):
        for name in ("left", "separator", "right"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    def swapped(self) -> VertexCut:
        return VertexCut(self.right, self.separator, self.left)


def validate_directed(graph: DirectedGraph, allow_complete: bool = True) -> None:
    """Re-check every digraph invariant, raising the first violation found.

    With ``allow_complete=False`` also require some ordered pair (u, v),
    u != v, that is not an arc.
    """
    _check_weights(graph.n, graph.weights)
    _check_pairs(graph.n, graph.arcs, directed=True)
    if not allow_complete and graph.is_complete():
        raise CompleteGraph("every ordered pair of vertices is an arc")


def validate_undirected(graph: UndirectedGraph, allow_complete: bool = True) -> None:
    _check_weights(graph.n, graph.weights)
    _check_pairs(graph.n, graph.edges, directed=False)
    if not allow_complete and graph.is_complete():
        raise CompleteGraph("every pair of vertices is an edge")


def _reach(adj: tuple[frozenset[int], ...], start: int, alive: set[int]) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v in alive and v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def is_strongly_connected(graph: Graph, removed: Iterable[int] = ()) -> bool:
    """True iff ``graph - removed`` has at most one vertex or is strongly connected."""
    alive = set(range(graph.n)) - set(removed)
    if len(alive) <= 1:
        return True
    root = min(alive)
    return (len(_reach(graph.out_adj, root, alive)) == len(alive)
            and len(_reach(graph.in_adj, root, alive)) == len(alive))


def is_connected(graph: UndirectedGraph, removed: Iterable[int] = ()) -> bool:
    """True iff ``graph - removed`` has at most one vertex or is connected."""
    alive = set(range(graph.n)) - set(removed)
    if len(alive) <= 1:
        return True
    return len(_reach(graph.adj, min(alive), alive)) == len(alive)


def validate_cut(graph: Graph, cut: VertexCut) -> None:
    """Raise unless ``cut`` is a vertex cut of ``graph``.

    For digraphs only arcs from left to right are forbidden; for undirected
    graphs any left-right edge is.
    """
    left, sep, right = cut.left, cut.separator, cut.right
    if left & sep or left & right or sep & right:
        raise NotTriPartition("left, separator and right must be pairwise disjoint")
    if left | sep | right != frozenset(range(graph.n)):
        raise NotTriPartition("left, separator and right must cover exactly the vertex set")
    if not left or not right:
        raise EmptySide("both sides of a vertex cut must be nonempty")
    for u in sorted(left):
        for v in sorted(graph.out_adj[u]):
            if v in right:
                raise CrossingEdge(u, v)


def weight_of(graph: Graph, vertices: Iterable[int]) -> int:
    return sum(graph.weights[v] for v in vertices)
