"""Max flow (Dinic) and s-t minimum vertex cuts via vertex splitting.

Every vertex ``v`` becomes two nodes, ``v-`` (index ``2v``) and ``v+``
(index ``2v + 1``), joined by an arc of capacity ``w(v)``.  Each arc
``(u, v)`` of the graph becomes ``u+ -> v-`` with capacity ``INF``; an
undirected edge contributes both directions.  ``INF = w(V) + 1`` exceeds
every separator weight, so a finite minimum cut only ever cuts vertex arcs.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field

from .errors import AdjacentPair, SamePair, VertexOutOfRange
from .graph import NO_CUT, CutValue, Graph, VertexCut

BACKENDS = ("dinic", "scipy")


@dataclass
class FlowNetwork:
    """Arc-capacitated network with paired reverse arcs.

    Arc ``2k`` is a forward arc and ``2k + 1`` its reverse (capacity 0).
    """

    node_count: int
    source: int = 0
    sink: int = 0
    inf: int = 0
    head: list[int] = field(default_factory=list)
    cap: list[int] = field(default_factory=list)
    adj: list[list[int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.adj:
            self.adj = [[] for _ in range(self.node_count)]

    def add_arc(self, u: int, v: int, capacity: int) -> int:
        if capacity < 0:
            raise ValueError(f"negative capacity {capacity} on arc ({u}, {v})")
        arc = len(self.head)
        self.head += (v, u)
        self.cap += (capacity, 0)
        self.adj[u].append(arc)
        self.adj[v].append(arc + 1)
        return arc

    def tail(self, arc: int) -> int:
        return self.head[arc ^ 1]

    @property
    def arc_count(self) -> int:
        return len(self.head) // 2


@dataclass
class FlowResult:
    value: int
    # Nodes reachable from the source in the final residual network; None
    # when the run stopped early at a caller-supplied limit.
    reachable: set[int] | None
    residual: list[int] | None = None


def _levels(n, adj, head, res, s, t):
    level = [-1] * n
    level[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        nxt = level[u] + 1
        for a in adj[u]:
            if res[a] > 0:
                v = head[a]
                if level[v] < 0:
                    level[v] = nxt
                    if v == t:
                        return level
                    queue.append(v)
    return level


def _residual_reach(net: FlowNetwork, res: list[int], s: int) -> set[int]:
    seen = {s}
    queue = deque([s])
    head, adj = net.head, net.adj
    while queue:
        u = queue.popleft()
        for a in adj[u]:
            v = head[a]
            if res[a] > 0 and v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def max_flow(net: FlowNetwork, source: int | None = None, sink: int | None = None,
             limit: int | None = None) -> FlowResult:
    """Maximum flow from source to sink with Dinic's algorithm.

    The network's capacities are left untouched; the run works on a
    residual copy.  If ``limit`` is given the run stops as soon as the flow
    reaches it and the returned value is only a lower bound.
    """
    s = net.source if source is None else source
    t = net.sink if sink is None else sink
    if s == t:
        raise SamePair("source and sink coincide")
    n, head, adj = net.node_count, net.head, net.adj
    res = list(net.cap)
    flow = 0
    while True:
        level = _levels(n, adj, head, res, s, t)
        if level[t] < 0:
            break
        ptr = [0] * n
        # Iterative DFS over the level graph; ``path`` holds arc ids.
        path: list[int] = []
        u = s
        while True:
            if u == t:
                push = min(res[a] for a in path)
                cut_at = None
                for i, a in enumerate(path):
                    res[a] -= push
                    res[a ^ 1] += push
                    if cut_at is None and res[a] == 0:
                        cut_at = i
                flow += push
                if limit is not None and flow >= limit:
                    return FlowResult(flow, None)
                del path[cut_at:]
                u = head[path[-1]] if path else s
                continue
            arcs = adj[u]
            i = ptr[u]
            lu = level[u] + 1
            while i < len(arcs):
                a = arcs[i]
                if res[a] > 0 and level[head[a]] == lu:
                    break
                i += 1
            ptr[u] = i
            if i < len(arcs):
                path.append(arcs[i])
                u = head[arcs[i]]
            else:
                if u == s:
                    break
                level[u] = -1
                a = path.pop()
                u = head[a ^ 1]
                ptr[u] += 1
    return FlowResult(flow, _residual_reach(net, res, s), res)


def minus(v: int) -> int:
    return 2 * v


def plus(v: int) -> int:
    return 2 * v + 1


def build_split_network(g: Graph) -> FlowNetwork:
    """Split network of ``g`` with every vertex arc at its weight."""
    inf = g.total_weight + 1
    net = FlowNetwork(2 * g.n, inf=inf)
    for v in range(g.n):
        net.add_arc(minus(v), plus(v), g.weights[v])
    pairs = g.arcs if g.directed else g.edges
    for u, v in pairs:
        net.add_arc(plus(u), minus(v), inf)
        if not g.directed:
            net.add_arc(plus(v), minus(u), inf)
    return net


def _check_pair(g: Graph, s: int, t: int) -> None:
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise VertexOutOfRange(f"pair ({s}, {t}) outside [0, {g.n})")
    if s == t:
        raise SamePair(f"source and sink are both {s}")


def build_st_vertex_network(g: Graph, s: int, t: int) -> FlowNetwork:
    """Split network for separating ``s`` from ``t``.

    The terminals' own vertex arcs get capacity ``INF`` since a separator
    never contains them.  Source is ``s+``, sink is ``t-``.
    """
    _check_pair(g, s, t)
    if g.adjacent(s, t):
        raise AdjacentPair(f"({s}, {t}) is an arc/edge and cannot be separated")
    net = build_split_network(g)
    # Vertex arc of v is arc 2v by construction.
    net.cap[2 * s] = net.inf
    net.cap[2 * t] = net.inf
    net.source, net.sink = plus(s), minus(t)
    return net


@dataclass(frozen=True)
class STCutResult:
    """Value of an s-t vertex cut plus its witness tri-partition.

    All three sets are None when the pair cannot be separated.
    """

    value: CutValue
    separator: frozenset[int] | None = None
    witness_left: frozenset[int] | None = None
    witness_right: frozenset[int] | None = None

    @property
    def cut(self) -> VertexCut | None:
        if self.separator is None:
            return None
        return VertexCut(self.witness_left, self.separator, self.witness_right)


def _cut_from_reach(g: Graph, s: int, t: int, value: int, reach: set[int]) -> STCutResult:
    left = frozenset(v for v in range(g.n) if plus(v) in reach) | {s}
    sep = frozenset(v for v in range(g.n)
                    if v != s and v != t and minus(v) in reach and plus(v) not in reach)
    right = frozenset(range(g.n)) - left - sep
    return STCutResult(value, sep, left, right)


def st_vertex_cut(g: Graph, s: int, t: int) -> STCutResult:
    """Minimum-weight separator of ``t`` from ``s`` with its canonical witness.

    The witness left side is the minimal source side: exactly the vertices
    whose out-node stays reachable in the final residual network.
    """
    _check_pair(g, s, t)
    if g.adjacent(s, t):
        return STCutResult(NO_CUT)
    net = build_st_vertex_network(g, s, t)
    result = max_flow(net)
    return _cut_from_reach(g, s, t, result.value, result.reachable)


class VertexCutSolver:
    """Answers many s-t vertex-cut queries on one graph.

    The split network is built once.  Terminal vertex arcs keep their finite
    capacity here: the source node ``s+`` has no use for flow entering
    through ``s-``, and flow leaving the sink ``t-`` is never counted, so
    the maximum flow is the same as with ``INF`` terminal arcs.

    ``backend="scipy"`` hands value-only queries to
    ``scipy.sparse.csgraph.maximum_flow``; witnesses always come from the
    native Dinic implementation.
    """

    def __init__(self, g: Graph, backend: str = "dinic"):
        if backend not in BACKENDS:
            raise ValueError(f"unknown flow backend {backend!r}; choose from {BACKENDS}")
        started = time.perf_counter()
        self.graph = g
        self.network = build_split_network(g)
        self.backend = backend
        self._csr = None
        if backend == "scipy":
            self._csr = _to_csr(self.network)
            if self._csr is None:
                self.backend = "dinic"
        self.queries = 0
        self.calls = 0
        self.flow_seconds = 0.0
        self.build_seconds = time.perf_counter() - started

    def value(self, s: int, t: int, limit: int | None = None) -> CutValue:
        """Cut value for ``(s, t)``; with ``limit`` any result >= limit means 'not below limit'."""
        g = self.graph
        _check_pair(g, s, t)
        self.queries += 1
        if g.adjacent(s, t):
            return NO_CUT
        started = time.perf_counter()
        self.calls += 1
        if self._csr is not None:
            from scipy.sparse.csgraph import maximum_flow

            value = int(maximum_flow(self._csr, plus(s), minus(t), method="dinic").flow_value)
        else:
            value = max_flow(self.network, plus(s), minus(t), limit=limit).value
        self.flow_seconds += time.perf_counter() - started
        return value

    def cut(self, s: int, t: int) -> STCutResult:
        g = self.graph
        _check_pair(g, s, t)
        self.queries += 1
        if g.adjacent(s, t):
            return STCutResult(NO_CUT)
        started = time.perf_counter()
        self.calls += 1
        result = max_flow(self.network, plus(s), minus(t))
        self.flow_seconds += time.perf_counter() - started
        return _cut_from_reach(g, s, t, result.value, result.reachable)


def _to_csr(net: FlowNetwork):
    """CSR capacity matrix of the forward arcs, or None if INF overflows int32."""
    import numpy as np
    from scipy.sparse import csr_array

    if net.inf >= 2**31:
        return None
    tails = np.fromiter((net.head[a + 1] for a in range(0, len(net.head), 2)), dtype=np.int64)
    heads = np.asarray(net.head[0::2], dtype=np.int64)
    caps = np.asarray(net.cap[0::2], dtype=np.int32)
    n = net.node_count
    return csr_array((caps, (tails, heads)), shape=(n, n), dtype=np.int32)
