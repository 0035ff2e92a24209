"""Exponential-time ground truth for every vertex-cut variant.

Two independent enumerations are provided:

* :class:`Oracle` enumerates the left side ``L`` of a cut.  For a fixed
  ``L`` the cheapest valid separator is ``N_out(L) - L`` and the right side
  is whatever remains, so minimising over all ``2^n`` sets ``L`` is exact.
  The tables are built with numpy and handle ~20 vertices comfortably.
* :func:`oracle_global_by_separators` and :func:`oracle_pair_by_separators`
  enumerate separators directly and test each candidate with a fresh graph
  traversal.  They are slower and only meant to cross-check the first route.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

import numpy as np

from .errors import BudgetExceeded, SamePair, TerminalSetTooSmall
from .graph import NO_CUT, CutValue, Graph, VertexCut, _reach


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 12
    max_subsets: int = 1 << 20

    def check(self, n: int) -> None:
        if n > self.max_n or (1 << n) > self.max_subsets:
            raise BudgetExceeded(
                f"oracle refuses n={n} (budget max_n={self.max_n}, max_subsets={self.max_subsets})")


class OracleResult(NamedTuple):
    value: CutValue
    cut: VertexCut | None


def _cut_from_mask(n: int, left_mask: int, nbr_mask: int) -> VertexCut:
    left = frozenset(v for v in range(n) if left_mask >> v & 1)
    sep = frozenset(v for v in range(n) if (nbr_mask & ~left_mask) >> v & 1)
    return VertexCut(left, sep, frozenset(range(n)) - left - sep)


class Oracle:
    """Subset tables for one graph, shared by all queries on it."""

    def __init__(self, g: Graph, budget: OracleBudget | None = None):
        budget = budget or OracleBudget()
        budget.check(g.n)
        self.graph = g
        n = g.n
        size = 1 << n
        nbr = np.zeros(size, dtype=np.int64)
        wsum = np.zeros(size, dtype=np.int64)
        for v in range(n):
            lo, hi = 1 << v, 1 << (v + 1)
            nbr[lo:hi] = nbr[:lo] | g.out_bits[v]
            wsum[lo:hi] = wsum[:lo] + g.weights[v]
        masks = np.arange(size, dtype=np.int64)
        self._masks = masks
        self._nbr = nbr
        self._closed = masks | nbr
        self._sep_weight = wsum[nbr & ~masks]

    def _best(self, valid: np.ndarray) -> OracleResult:
        if not valid.any():
            return OracleResult(NO_CUT, None)
        weights = np.where(valid, self._sep_weight, np.iinfo(np.int64).max)
        best = int(np.argmin(weights))
        cut = _cut_from_mask(self.graph.n, best, int(self._nbr[best]))
        return OracleResult(int(weights[best]), cut)

    def global_cut(self) -> OracleResult:
        full = (1 << self.graph.n) - 1
        valid = (self._masks != 0) & (self._closed != full)
        return self._best(valid)

    def pair(self, s: int, t: int) -> OracleResult:
        if s == t:
            raise SamePair(f"source and sink are both {s}")
        if self.graph.adjacent(s, t):
            return OracleResult(NO_CUT, None)
        valid = ((self._masks >> s) & 1).astype(bool) & ~((self._closed >> t) & 1).astype(bool)
        return self._best(valid)

    def _min_over(self, pairs) -> OracleResult:
        best = OracleResult(NO_CUT, None)
        for s, t in pairs:
            if self.graph.adjacent(s, t):
                continue
            res = self.pair(s, t)
            if res.value < best.value:
                best = res
        return best

    def source(self, s: int) -> OracleResult:
        return self._min_over((s, t) for t in range(self.graph.n) if t != s)

    def sink(self, t: int) -> OracleResult:
        return self._min_over((s, t) for s in range(self.graph.n) if s != t)

    def steiner(self, terminals) -> OracleResult:
        terms = sorted(set(terminals))
        if len(terms) < 2:
            raise TerminalSetTooSmall(f"need at least 2 terminals, got {len(terms)}")
        if self.graph.directed:
            pairs = [(s, t) for s in terms for t in terms if s != t]
        else:
            pairs = list(combinations(terms, 2))
        return self._min_over(pairs)

    def all_pairs(self) -> list[list[CutValue]]:
        n = self.graph.n
        return [[NO_CUT if s == t else self.pair(s, t).value for t in range(n)] for s in range(n)]

    def variant(self, query):
        """Dispatch a :class:`~vcreduce.connectivity.VariantQuery`."""
        kind = query.kind
        if kind == "global":
            return self.global_cut()
        if kind == "pair":
            return self.pair(query.s, query.t)
        if kind == "source":
            return self.source(query.s)
        if kind == "sink":
            return self.sink(query.t)
        if kind == "steiner":
            return self.steiner(query.terminals)
        if kind == "all-pairs":
            return self.all_pairs()
        raise ValueError(f"unknown variant {kind!r}")


def oracle_global(g: Graph, budget: OracleBudget | None = None) -> OracleResult:
    return Oracle(g, budget).global_cut()


def oracle_pair(g: Graph, s: int, t: int, budget: OracleBudget | None = None) -> OracleResult:
    return Oracle(g, budget).pair(s, t)


def oracle_variant(g: Graph, query, budget: OracleBudget | None = None):
    return Oracle(g, budget).variant(query)


def _subsets_by_size(items: list[int]):
    for k in range(len(items) + 1):
        yield from combinations(items, k)


def oracle_global_by_separators(g: Graph, budget: OracleBudget | None = None) -> OracleResult:
    """Cheapest ``S`` whose removal leaves >= 2 vertices that are not (strongly) connected."""
    (budget or OracleBudget()).check(g.n)
    best = OracleResult(NO_CUT, None)
    everything = set(range(g.n))
    for sep in _subsets_by_size(list(range(g.n))):
        w = sum(g.weights[v] for v in sep)
        if w >= best.value:
            continue
        alive = everything - set(sep)
        if len(alive) < 2:
            continue
        root = min(alive)
        fwd = _reach(g.out_adj, root, alive)
        if len(fwd) < len(alive):
            best = OracleResult(w, VertexCut(fwd, sep, alive - fwd))
            continue
        back = _reach(g.in_adj, root, alive)
        if len(back) < len(alive):
            best = OracleResult(w, VertexCut(alive - back, sep, back))
    return best


def oracle_pair_by_separators(g: Graph, s: int, t: int,
                              budget: OracleBudget | None = None) -> OracleResult:
    """Cheapest ``S`` avoiding ``s, t`` after whose removal ``t`` is unreachable from ``s``."""
    (budget or OracleBudget()).check(g.n)
    if s == t:
        raise SamePair(f"source and sink are both {s}")
    if g.adjacent(s, t):
        return OracleResult(NO_CUT, None)
    best = OracleResult(NO_CUT, None)
    everything = set(range(g.n))
    others = [v for v in range(g.n) if v not in (s, t)]
    for sep in _subsets_by_size(others):
        w = sum(g.weights[v] for v in sep)
        if w >= best.value:
            continue
        alive = everything - set(sep)
        reach = _reach(g.out_adj, s, alive)
        if t not in reach:
            best = OracleResult(w, VertexCut(reach, sep, alive - reach))
    return best
