from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vcreduce.errors import CutError, EmptySet, InvalidCut
from vcreduce.graph import DirectedGraph, VertexCut, validate_cut, weight_of
from vcreduce.reduction import (
    build_reduction,
    extract_directed_cut,
    lift_directed_cut,
    normalize_cut,
    reduced_edges,
    reduced_neighborhood_weight,
)

from .conftest import digraphs


def in_neighborhood_weight(g, members):
    """Weight of vertices outside ``members`` with an arc into it, read off the digraph."""
    return weight_of(g, {u for u, v in g.arcs if v in members and u not in members})


def expected_edge_set(g):
    n = g.n
    edges = set()
    for u, v in combinations(range(n), 2):
        edges.add(frozenset((u, v)))
        edges.add(frozenset((u + n, v + n)))
    for v in range(n):
        edges.add(frozenset((v, v + n)))
    for u, v in g.arcs:
        edges.add(frozenset((u, v + n)))
    return edges


def test_cycle_reduction_sizes(cycle3):
    r = build_reduction(cycle3)
    assert (r.graph.n, r.graph.m, r.total_weight) == (6, 12, 3)
    assert {frozenset(e) for e in r.graph.edges} == expected_edge_set(cycle3)


def test_single_arc_reduction_edges(single_arc):
    r = build_reduction(single_arc)
    assert r.graph.n == 4
    assert list(r.graph.edges) == [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3)]


def test_single_vertex_reduction():
    r = build_reduction(DirectedGraph(1))
    assert (r.graph.n, r.graph.m) == (2, 1)
    assert r.graph.edges == ((0, 1),)


def test_copies_and_weights(wcycle3):
    r = build_reduction(wcycle3)
    for v in range(3):
        assert r.graph.weights[r.out_copy(v)] == r.graph.weights[r.in_copy(v)] == wcycle3.weights[v]
        assert r.original(r.in_copy(v)) == v
    assert r.total_weight == 8


def test_reduced_edges_block_order():
    g = DirectedGraph(3, [(2, 0), (0, 1)])
    edges = reduced_edges(g)
    assert edges[:3] == [(0, 1), (0, 2), (1, 2)]
    assert edges[3:6] == [(3, 4), (3, 5), (4, 5)]
    assert edges[6:9] == [(0, 3), (1, 4), (2, 5)]
    assert edges[9:] == [(0, 4), (2, 3)]


@settings(max_examples=200, deadline=None)
@given(digraphs(max_n=12))
def test_size_identity(g):
    r = build_reduction(g)
    assert r.graph.n == 2 * g.n
    assert r.graph.m == 2 * (g.n * (g.n - 1) // 2) + g.n + g.m
    assert {frozenset(e) for e in r.graph.edges} == expected_edge_set(g)


def test_normalize_keeps_oriented_cut(single_arc):
    r = build_reduction(single_arc)
    cut = VertexCut({1}, {0, 3}, {2})
    assert normalize_cut(r, cut).cut == cut


def test_normalize_swaps_reversed_cut(single_arc):
    r = build_reduction(single_arc)
    assert normalize_cut(r, VertexCut({2}, {0, 3}, {1})).cut == VertexCut({1}, {0, 3}, {2})


def test_normalize_rejects_straddling_side(cycle3):
    r = build_reduction(cycle3)
    # left meets both copies; the out-clique edge {0_out, 1_out} crosses
    cut = VertexCut({0, 5}, {2, 3, 4}, {1})
    with pytest.raises(CutError):
        validate_cut(r.graph, cut)
    with pytest.raises(InvalidCut):
        normalize_cut(r, cut)


def test_extract_single_arc(single_arc):
    r = build_reduction(single_arc)
    ncut = normalize_cut(r, VertexCut({1}, {0, 3}, {2}))
    cut = extract_directed_cut(r, ncut)
    assert cut == VertexCut({1}, set(), {0})
    assert weight_of(single_arc, cut.separator) == weight_of(r.graph, ncut.separator) - 2 == 0


def test_extract_cycle(cycle3):
    r = build_reduction(cycle3)
    sep = {0, 1, 3, 5}   # N({1_in}) in the reduced graph
    assert weight_of(r.graph, sep) == 4
    cut = extract_directed_cut(r, normalize_cut(r, VertexCut({2}, sep, {4})))
    assert cut == VertexCut({2}, {0}, {1})
    assert weight_of(cycle3, cut.separator) == 1


def test_lift_cycle(cycle3, single_arc):
    r = build_reduction(cycle3)
    lifted = lift_directed_cut(r, VertexCut({2}, {0}, {1}))
    assert lifted.left == {2} and lifted.right == {4}
    assert lifted.separator == {0, 1, 3, 5}
    assert weight_of(r.graph, lifted.separator) == 4
    r2 = build_reduction(single_arc)
    assert weight_of(r2.graph, lift_directed_cut(r2, VertexCut({1}, set(), {0})).separator) == 2


def test_neighborhood_weight_examples(cycle3, wcycle3):
    r = build_reduction(cycle3)
    assert reduced_neighborhood_weight(r, [4]) == 4
    assert reduced_neighborhood_weight(r, [3, 4, 5]) == 3
    assert reduced_neighborhood_weight(build_reduction(wcycle3), [4]) == 13
    with pytest.raises(EmptySet):
        reduced_neighborhood_weight(r, [])


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=6))
def test_neighborhood_identity_exhaustive(g):
    r = build_reduction(g)
    for k in range(1, g.n + 1):
        for members in combinations(range(g.n), k):
            got = reduced_neighborhood_weight(r, [r.in_copy(v) for v in members])
            assert got == in_neighborhood_weight(g, set(members)) + g.total_weight


def all_tripartitions(n):
    for labels in product(range(3), repeat=n):
        parts = [{v for v in range(n) if labels[v] == k} for k in range(3)]
        if parts[0] and parts[2]:
            yield VertexCut(*parts)


@pytest.mark.parametrize("arcs", [[], [(0, 1)], [(0, 1), (1, 2), (2, 0)], [(0, 1), (1, 0), (2, 1)]])
def test_every_reduced_cut_is_split_across_copies(arcs):
    g = DirectedGraph(3, arcs, [1, 2, 3])
    r = build_reduction(g)
    seen = 0
    for cut in all_tripartitions(6):
        try:
            validate_cut(r.graph, cut)
        except CutError:
            continue
        seen += 1
        out_side = cut.left if max(cut.left) < 3 else cut.right
        in_side = cut.right if out_side is cut.left else cut.left
        assert max(out_side) < 3 <= min(in_side)
        ncut = normalize_cut(r, cut)
        directed = extract_directed_cut(r, ncut)
        validate_cut(g, directed)
        assert weight_of(g, directed.separator) == weight_of(r.graph, cut.separator) - g.total_weight
        # extract then lift is the identity on normalized cuts
        assert lift_directed_cut(r, directed) == ncut
    assert seen > 0


@settings(max_examples=150, deadline=None)
@given(digraphs(min_n=2, max_n=9), st.randoms(use_true_random=False))
def test_lift_extract_round_trip(g, rng):
    left = set(rng.sample(range(g.n), rng.randint(1, g.n - 1)))
    right = set(range(g.n)) - left - {w for u in left for w in g.out_adj[u]}
    right = {v for v in right if rng.random() < 0.7} or right
    if not right:
        return
    cut = VertexCut(left, set(range(g.n)) - left - right, right)
    r = build_reduction(g)
    lifted = lift_directed_cut(r, cut)
    validate_cut(r.graph, lifted.cut)
    assert weight_of(r.graph, lifted.separator) == weight_of(g, cut.separator) + g.total_weight
    assert extract_directed_cut(r, lifted) == cut
