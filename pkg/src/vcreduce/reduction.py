"""Directed-to-undirected reduction for vertex cuts.

The reduced graph has two copies of every vertex: ``v_out = v`` and
``v_in = v + n``.  Each copy forms a clique, ``v_out`` is joined to
``v_in``, and every arc ``(u, v)`` becomes the edge ``{u_out, v_in}``.
Both copies inherit the weight of ``v``.

Every vertex cut of the reduced graph has one side inside the out-copy and
the other inside the in-copy, and its separator weighs exactly ``w(V)``
more than the directed cut it encodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import CutError, EmptySet, InvalidCut, VertexOutOfRange
from .graph import DirectedGraph, UndirectedGraph, VertexCut, validate_cut


@dataclass(frozen=True)
class ReducedGraph:
    graph: UndirectedGraph
    source: DirectedGraph

    @property
    def n(self) -> int:
        return self.source.n

    @property
    def total_weight(self) -> int:
        return self.source.total_weight

    def out_copy(self, v: int) -> int:
        return v

    def in_copy(self, v: int) -> int:
        return v + self.n

    def is_out(self, v: int) -> bool:
        return v < self.n

    def original(self, v: int) -> int:
        return v if v < self.n else v - self.n

    @property
    def out_vertices(self) -> range:
        return range(self.n)

    @property
    def in_vertices(self) -> range:
        return range(self.n, 2 * self.n)


@dataclass(frozen=True)
class NormalizedCut:
    """A vertex cut of the reduced graph with left in V_out and right in V_in."""

    cut: VertexCut

    @property
    def left(self) -> frozenset[int]:
        return self.cut.left

    @property
    def separator(self) -> frozenset[int]:
        return self.cut.separator

    @property
    def right(self) -> frozenset[int]:
        return self.cut.right


def reduced_edges(g: DirectedGraph) -> list[tuple[int, int]]:
    """Edges of the reduced graph in canonical order.

    Out-clique, in-clique, matching, then one edge per arc; each block
    lexicographic.
    """
    n = g.n
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges += [(u + n, v + n) for u in range(n) for v in range(u + 1, n)]
    edges += [(v, v + n) for v in range(n)]
    edges += [(u, v + n) for u, v in sorted(g.arcs)]
    return edges


def build_reduction(g: DirectedGraph) -> ReducedGraph:
    reduced = UndirectedGraph(2 * g.n, reduced_edges(g), g.weights + g.weights)
    return ReducedGraph(reduced, g)


def normalize_cut(r: ReducedGraph, cut: VertexCut) -> NormalizedCut:
    """Orient a cut of the reduced graph so that its left side lies in V_out."""
    try:
        validate_cut(r.graph, cut)
    except CutError as exc:
        raise InvalidCut(f"not a vertex cut of the reduced graph: {exc}") from exc
    n = r.n
    if max(cut.left) < n and min(cut.right) >= n:
        return NormalizedCut(cut)
    if max(cut.right) < n and min(cut.left) >= n:
        return NormalizedCut(cut.swapped())
    # Unreachable: each copy is a clique, so it cannot meet both sides.
    raise AssertionError(f"cut sides straddle both copies: {cut}")


def extract_directed_cut(r: ReducedGraph, cut: NormalizedCut) -> VertexCut:
    """Map a normalized cut of the reduced graph back to a directed cut.

    The separator is everything not on either side, so its weight is
    ``w'(S') - w(V)`` for any normalized cut, minimum or not.
    """
    left = frozenset(cut.left)
    right = frozenset(v - r.n for v in cut.right)
    sep = frozenset(range(r.n)) - left - right
    return VertexCut(left, sep, right)


def lift_directed_cut(r: ReducedGraph, cut: VertexCut) -> NormalizedCut:
    """Embed a directed cut ``(L, S, R)`` as ``(L_out, rest, R_in)``."""
    validate_cut(r.source, cut)
    left = frozenset(cut.left)
    right = frozenset(v + r.n for v in cut.right)
    sep = frozenset(range(2 * r.n)) - left - right
    return NormalizedCut(VertexCut(left, sep, right))


def reduced_neighborhood_weight(r: ReducedGraph, in_vertices: Iterable[int]) -> int:
    """Weight of the neighborhood of a nonempty set of in-copy vertices."""
    members = 0
    for v in in_vertices:
        if not r.n <= v < 2 * r.n:
            raise VertexOutOfRange(f"vertex {v} is not in the in-copy")
        members |= 1 << v
    if not members:
        raise EmptySet("neighborhood of the empty set is not defined here")
    adj = r.graph.adj_bits
    nbrs = 0
    rest = members
    while rest:
        low = rest & -rest
        nbrs |= adj[low.bit_length() - 1]
        rest ^= low
    nbrs &= ~members
    weights = r.graph.weights
    total = 0
    while nbrs:
        low = nbrs & -nbrs
        total += weights[low.bit_length() - 1]
        nbrs ^= low
    return total
