import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vcreduce.errors import (
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
from vcreduce.graph import (
    DirectedGraph,
    UndirectedGraph,
    VertexCut,
    _reach,
    is_connected,
    is_strongly_connected,
    validate_cut,
    validate_directed,
    weight_of,
)

from .conftest import digraphs


def test_well_formed_cycle_validates(cycle3):
    validate_directed(cycle3)
    validate_directed(cycle3, allow_complete=False)
    assert (cycle3.n, cycle3.m) == (3, 3)
    assert cycle3.out_adj[0] == {1} and cycle3.in_adj[0] == {2}


@pytest.mark.parametrize("n, arcs, weights, error", [
    (2, [(0, 0)], None, SelfLoop),
    (2, [(0, 1)], [0, 1], NonPositiveWeight),
    (2, [(0, 1)], [-3, 1], NonPositiveWeight),
    (2, [(0, 1), (0, 1)], None, DuplicateArc),
    (2, [(0, 2)], None, VertexOutOfRange),
    (2, [(0, 1)], [2**61, 1], WeightTooLarge),
    (0, [], [], GraphError),
])
def test_invalid_digraphs_rejected(n, arcs, weights, error):
    with pytest.raises(error):
        DirectedGraph(n, arcs, weights)


def test_undirected_duplicate_in_either_orientation():
    with pytest.raises(DuplicateArc):
        UndirectedGraph(3, [(0, 1), (1, 0)])


def test_complete_digraph_flagged_only_when_asked():
    k3 = DirectedGraph(3, [(u, v) for u in range(3) for v in range(3) if u != v])
    validate_directed(k3)
    with pytest.raises(CompleteGraph):
        validate_directed(k3, allow_complete=False)


def test_strong_connectivity(cycle3, single_arc):
    assert is_strongly_connected(cycle3)
    assert not is_strongly_connected(cycle3, {1})
    assert not is_strongly_connected(single_arc)
    assert is_strongly_connected(single_arc, {0})


def test_connectivity(triangle):
    path = UndirectedGraph(3, [(0, 1), (1, 2)])
    assert is_connected(triangle)
    assert not is_connected(path, {1})
    assert is_connected(path, {0, 1, 2})
    assert is_connected(triangle, set(range(3)))


def test_validate_cut_examples(cycle3, single_arc, triangle):
    with pytest.raises(CrossingEdge) as info:
        validate_cut(cycle3, VertexCut({2}, {1}, {0}))
    assert (info.value.u, info.value.v) == (2, 0)
    validate_cut(single_arc, VertexCut({1}, set(), {0}))
    with pytest.raises(CrossingEdge):
        validate_cut(single_arc, VertexCut({0}, set(), {1}))
    with pytest.raises(CrossingEdge):
        validate_cut(triangle, VertexCut({0}, set(), {1, 2}))


def test_validate_cut_structure(cycle3):
    with pytest.raises(NotTriPartition):
        validate_cut(cycle3, VertexCut({0}, {0, 1}, {2}))
    with pytest.raises(NotTriPartition):
        validate_cut(cycle3, VertexCut({0}, set(), {2}))
    with pytest.raises(EmptySide):
        validate_cut(cycle3, VertexCut(set(), {0, 1}, {2}))


def test_weight_of(wcycle3, cycle3):
    assert weight_of(cycle3, {0, 1}) == 2
    assert weight_of(wcycle3, {1, 2}) == 3
    assert weight_of(wcycle3, set()) == 0


def test_equality_ignores_arc_order():
    assert DirectedGraph(3, [(0, 1), (1, 2)]) == DirectedGraph(3, [(1, 2), (0, 1)])
    assert DirectedGraph(3, [(0, 1)]) != DirectedGraph(3, [(1, 0)])
    assert UndirectedGraph(2, [(1, 0)]) == UndirectedGraph(2, [(0, 1)])


@settings(max_examples=150, deadline=None)
@given(digraphs(min_n=2, max_n=7), st.randoms(use_true_random=False))
def test_valid_cut_disconnects(g, rng):
    left = {rng.randrange(g.n)}
    rest = [v for v in range(g.n) if v not in left]
    right = {v for v in rest if rng.random() < 0.5} - {w for u in left for w in g.out_adj[u]}
    if not right:
        return
    cut = VertexCut(left, set(range(g.n)) - left - right, right)
    validate_cut(g, cut)
    alive = left | right
    for u in left:
        assert not (_reach(g.out_adj, u, alive) & right)
    assert not is_strongly_connected(g, cut.separator)


@given(digraphs(), st.data())
def test_weight_additive_over_disjoint_sets(g, data):
    a = data.draw(st.sets(st.integers(0, g.n - 1)))
    b = data.draw(st.sets(st.integers(0, g.n - 1))) - a
    assert weight_of(g, a | b) == weight_of(g, a) + weight_of(g, b)
