"""Randomised cross-checking of the reduction against the direct solver and the oracle."""

from __future__ import annotations

import random
from collections import Counter
from itertools import combinations
from typing import Callable

from .connectivity import (
    Via,
    check_solution,
    directed_all_pairs,
    directed_global,
    directed_pair,
    directed_sink,
    directed_source,
    directed_steiner,
)
from .errors import BudgetExceeded
from .flow import st_vertex_cut
from .graph import NO_CUT, weight_of
from .instance import generate_gnp
from .oracle import Oracle, OracleBudget
from .reduction import (
    build_reduction,
    extract_directed_cut,
    lift_directed_cut,
    reduced_neighborhood_weight,
)

CHECKS = ("size", "neighborhood", "global", "pair", "source_sink", "steiner", "witness", "flow")
DENSITIES = ("0.1", "0.3", "0.5", "0.7", "0.9")
WMAXES = (1, 3, 10)
ORACLE_BUDGET = OracleBudget(max_n=18, max_subsets=1 << 18)
FLOW_CHECK_MAX_N = 8


class _Trial:
    def __init__(self, tally: Counter, failures: list[str], reproducer: str):
        self.tally = tally
        self.failures = failures
        self.reproducer = reproducer

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.tally[name, "pass" if ok else "fail"] += 1
        if not ok:
            self.failures.append(f"FAIL {name}: {detail}; reproduce with: {self.reproducer}")

    def skip(self, name: str) -> None:
        self.tally[name, "skip"] += 1


def _nbhd_oracle(g, members: set[int]) -> int:
    # In-neighbours of ``members`` outside it, summed directly on the digraph.
    inn = {u for v in members for u in g.in_adj[v]} - members
    return weight_of(g, inn)


def verify_instance(g, trial: _Trial, rng: random.Random) -> None:
    n = g.n
    r = build_reduction(g)
    shift = g.total_weight

    trial.check("size", r.graph.n == 2 * n and r.graph.m == n * (n - 1) + n + g.m,
                f"|V'|={r.graph.n} |E'|={r.graph.m}")

    if n <= 6:
        subsets = [set(c) for k in range(1, n + 1) for c in combinations(range(n), k)]
    else:
        subsets = [set(rng.sample(range(n), rng.randint(1, n))) for _ in range(200)]
    ok = all(reduced_neighborhood_weight(r, [v + n for v in R]) == _nbhd_oracle(g, R) + shift
             for R in subsets)
    trial.check("neighborhood", ok, "w'(N(R_in)) != w(N_in(R)) + w(V)")

    try:
        oracle = Oracle(g, ORACLE_BUDGET)
    except BudgetExceeded:
        oracle = None
    try:
        oracle_reduced = Oracle(r.graph, ORACLE_BUDGET)
    except BudgetExceeded:
        oracle_reduced = None

    solutions = []
    if not g.is_complete():
        by_path = {via: directed_global(g, via) for via in Via}
        solutions += by_path.values()
        values = {sol.value for sol in by_path.values()}
        if oracle is not None:
            values.add(oracle.global_cut().value)
        if oracle_reduced is not None:
            values.add(oracle_reduced.global_cut().value - shift)
        trial.check("global", len(values) == 1, f"global values disagree: {sorted(values)}")
        cut = by_path[Via.DIRECT].cut
        back = extract_directed_cut(r, lift_directed_cut(r, cut))
        trial.check("witness", back == cut, "extract(lift(cut)) != cut")
    else:
        trial.skip("global")

    matrices = [directed_all_pairs(g, via) for via in Via]
    if oracle is not None:
        matrices.append(oracle.all_pairs())
    expected = [[NO_CUT if g.adjacent(s, t) else None for t in range(n)] for s in range(n)]
    ok = all(m == matrices[0] for m in matrices) and all(
        (matrices[0][s][t] == NO_CUT) == (expected[s][t] == NO_CUT)
        for s in range(n) for t in range(n))
    trial.check("pair", ok, "all-pairs matrices disagree between paths/oracle")
    if n >= 2:
        s, t = rng.sample(range(n), 2)
        solutions += [directed_pair(g, s, t, via) for via in Via]

    v = rng.randrange(n)
    src = [directed_source(g, v, via) for via in Via]
    snk = [directed_sink(g, v, via) for via in Via]
    solutions += src + snk
    ok = src[0].value == src[1].value and snk[0].value == snk[1].value
    if oracle is not None:
        ok = ok and src[0].value == oracle.source(v).value and snk[0].value == oracle.sink(v).value
    trial.check("source_sink", ok, f"source/sink values disagree at vertex {v}")

    if n >= 2:
        terms = rng.sample(range(n), rng.randint(2, n))
        st = [directed_steiner(g, terms, via) for via in Via]
        solutions += st
        ok = st[0].value == st[1].value
        if oracle is not None:
            ok = ok and st[0].value == oracle.steiner(terms).value
        trial.check("steiner", ok, f"Steiner values disagree for T={sorted(terms)}")
    else:
        trial.skip("steiner")

    try:
        for sol in solutions:
            check_solution(g, sol, r)
        trial.check("witness", True)
    except Exception as exc:  # any broken invariant is a failure to report
        trial.check("witness", False, f"invalid witness: {exc!r}")

    if oracle is not None and n <= FLOW_CHECK_MAX_N:
        ok = all(st_vertex_cut(g, s, t).value == oracle.pair(s, t).value
                 for s in range(n) for t in range(n) if s != t and not g.adjacent(s, t))
        trial.check("flow", ok, "st_vertex_cut disagrees with oracle_pair")
    else:
        trial.skip("flow")

    if oracle is None or oracle_reduced is None:
        trial.tally["oracle", "skip"] += 1


def run_verification(trials: int, max_n: int, seed: int,
                     out: Callable[[str], None] = print) -> bool:
    """Check every identity on ``trials`` random instances; True if all pass."""
    rng = random.Random(seed)
    tally: Counter = Counter()
    failures: list[str] = []
    for i in range(trials):
        n = rng.randint(1, max_n)
        p = rng.choice(DENSITIES)
        wmax = rng.choice(WMAXES)
        inst_seed = rng.randrange(2**32)
        g = generate_gnp(n, float(p), wmax, inst_seed)
        repro = f"vcreduce gen --model gnp --n {n} --p {p} --wmax {wmax} --seed {inst_seed}"
        trial = _Trial(tally, failures, f"{repro}  (trial {i}, verify --seed {seed})")
        verify_instance(g, trial, random.Random(inst_seed))

    out(f"{'check':<14}{'pass':>8}{'fail':>8}{'skip':>8}")
    for name in CHECKS:
        out(f"{name:<14}{tally[name, 'pass']:>8}{tally[name, 'fail']:>8}{tally[name, 'skip']:>8}")
    if tally["oracle", "skip"]:
        out(f"note: {tally['oracle', 'skip']} instance(s) exceed the oracle budget "
            f"(n > {ORACLE_BUDGET.max_n // 2} for reduced-graph checks, n > {ORACLE_BUDGET.max_n} "
            f"for all oracle checks); path-equivalence checks were still run")
    for line in failures:
        out(line)
    passed = not failures
    out(f"result {'PASS' if passed else 'FAIL'} ({trials} trials)")
    return passed
