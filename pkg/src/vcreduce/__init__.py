"""Directed vertex connectivity through a reduction to undirected graphs."""

from .connectivity import (
    Solution,
    SolveStats,
    VariantQuery,
    Via,
    directed_all_pairs,
    directed_global,
    directed_pair,
    directed_sink,
    directed_source,
    directed_steiner,
    solve,
    undirected_global,
    undirected_pair,
    undirected_source,
    undirected_steiner,
)
from .graph import NO_CUT, DirectedGraph, UndirectedGraph, VertexCut
from .reduction import build_reduction

__all__ = [
    "NO_CUT",
    "DirectedGraph",
    "Solution",
    "SolveStats",
    "UndirectedGraph",
    "VariantQuery",
    "VertexCut",
    "Via",
    "build_reduction",
    "directed_all_pairs",
    "directed_global",
    "directed_pair",
    "directed_sink",
    "directed_source",
    "directed_steiner",
    "solve",
    "undirected_global",
    "undirected_pair",
    "undirected_source",
    "undirected_steiner",
]
