"""Wall-clock comparison of the reduction path against the direct path."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .connectivity import SolveStats, VariantQuery, Via, solve
from .graph import NO_CUT, DirectedGraph


@dataclass
class BenchRow:
    via: str
    value: object
    stats: SolveStats
    total_seconds: float


def bench_query(g: DirectedGraph, kind: str) -> VariantQuery:
    if kind == "pair":
        return VariantQuery("pair", s=0, t=g.n - 1)
    if kind == "source":
        return VariantQuery("source", s=0)
    if kind == "sink":
        return VariantQuery("sink", t=0)
    if kind == "steiner":
        return VariantQuery("steiner", terminals=range(g.n))
    return VariantQuery(kind)


def run_bench(g: DirectedGraph, kind: str, paths: list[Via], backend: str = "dinic") -> list[BenchRow]:
    query = bench_query(g, kind)
    rows = []
    for via in paths:
        stats = SolveStats()
        started = time.perf_counter()
        result = solve(g, query, via, backend, stats)
        elapsed = time.perf_counter() - started
        value = result if kind == "all-pairs" else result.value
        rows.append(BenchRow(via.value, value, stats, elapsed))
    return rows


def _summary(value) -> str:
    if isinstance(value, list):
        finite = [x for row in value for x in row if x != NO_CUT]
        return f"min={min(finite)}" if finite else "min=inf"
    return str(value)


def format_rows(rows: list[BenchRow]) -> list[str]:
    header = (f"{'via':<10}{'value':>12}{'reduce_ms':>11}{'build_ms':>10}{'flow_ms':>11}"
              f"{'total_ms':>11}{'queries':>9}{'flows':>8}{'net_nodes':>10}{'net_arcs':>10}")
    lines = [header]
    for row in rows:
        st = row.stats
        lines.append(
            f"{row.via:<10}{_summary(row.value):>12}{st.reduction_seconds * 1e3:>11.1f}"
            f"{st.build_seconds * 1e3:>10.1f}{st.flow_seconds * 1e3:>11.1f}"
            f"{row.total_seconds * 1e3:>11.1f}{st.pair_queries:>9}{st.flow_calls:>8}"
            f"{st.network_nodes:>10}{st.network_arcs:>10}")
    if len(rows) > 1:
        agree = all(r.value == rows[0].value for r in rows)
        lines.append(f"agree {'yes' if agree else 'no'}")
    return lines
