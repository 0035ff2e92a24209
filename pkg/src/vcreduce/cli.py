"""Command-line front end.

Exit codes: 0 on success, 1 when the input fails validation (or a
verification run finds a failure), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence

from . import bench
from .connectivity import KINDS, Solution, VariantQuery, Via, solve
from .errors import VertexCutError
from .flow import BACKENDS
from .graph import Graph
from .instance import format_instance, generate_gnp, read_instance
from .oracle import Oracle, OracleBudget
from .reduction import build_reduction
from .verify import run_verification


class UsageError(Exception):
    pass


def _vertex(token: str, g: Graph) -> int:
    try:
        v = int(token)
    except ValueError:
        raise UsageError(f"vertex {token!r} is not an integer") from None
    if not 1 <= v <= g.n:
        raise UsageError(f"vertex {v} outside [1, {g.n}]")
    return v - 1


def parse_variant(tokens: Sequence[str], g: Graph) -> VariantQuery:
    """Turn ``--variant`` tokens (1-based vertices) into a query."""
    kind, args = tokens[0], list(tokens[1:])
    arity = {"global": 0, "all-pairs": 0, "pair": 2, "source": 1, "sink": 1, "steiner": 1}
    if kind not in KINDS:
        raise UsageError(f"unknown variant {kind!r}; choose from {', '.join(KINDS)}")
    if len(args) != arity[kind]:
        raise UsageError(f"variant {kind!r} takes {arity[kind]} argument(s), got {len(args)}")
    if kind == "pair":
        s, t = _vertex(args[0], g), _vertex(args[1], g)
        if s == t:
            raise UsageError("pair needs two distinct vertices")
        return VariantQuery("pair", s=s, t=t)
    if kind == "source":
        return VariantQuery("source", s=_vertex(args[0], g))
    if kind == "sink":
        return VariantQuery("sink", t=_vertex(args[0], g))
    if kind == "steiner":
        terms = {_vertex(tok, g) for tok in args[0].split(",") if tok}
        if len(terms) < 2:
            raise UsageError("steiner needs at least two distinct terminals, e.g. 1,2,3")
        return VariantQuery("steiner", terminals=terms)
    return VariantQuery(kind)


def _fmt_set(vs) -> str:
    return "[" + ",".join(str(v + 1) for v in sorted(vs)) + "]"


def _fmt_value(x) -> str:
    return "inf" if x == float("inf") else str(x)


def report(query: VariantQuery, via: str, result, witness: bool, elapsed: float) -> list[str]:
    lines = [f"variant {query.kind}", f"via {via}"]
    if query.kind == "all-pairs":
        lines.append(f"matrix {len(result)}")
        lines += [" ".join(_fmt_value(x) for x in row) for row in result]
    else:
        value, cut = (result.value, result.cut) if isinstance(result, Solution) else result
        lines.append(f"value {_fmt_value(value)}")
        if witness and cut is not None:
            lines += [f"left {_fmt_set(cut.left)}", f"separator {_fmt_set(cut.separator)}",
                      f"right {_fmt_set(cut.right)}"]
    lines.append(f"time_ms {elapsed * 1e3:.3f}")
    return lines


def cmd_reduce(args) -> int:
    g = read_instance(args.input)
    if not g.directed:
        raise UsageError("reduce expects a directed ('p dvc') instance")
    sys.stdout.write(format_instance(build_reduction(g).graph))
    return 0


def cmd_solve(args) -> int:
    g = read_instance(args.input)
    query = parse_variant(args.variant, g)
    started = time.perf_counter()
    result = solve(g, query, Via(args.via), args.backend)
    elapsed = time.perf_counter() - started
    via = args.via if g.directed else "undirected"
    print("\n".join(report(query, via, result, args.witness, elapsed)))
    return 0


def cmd_oracle(args) -> int:
    g = read_instance(args.input)
    query = parse_variant(args.variant, g)
    started = time.perf_counter()
    result = Oracle(g, OracleBudget(max_n=args.max_n, max_subsets=1 << args.max_n)).variant(query)
    elapsed = time.perf_counter() - started
    print("\n".join(report(query, "oracle", result, args.witness, elapsed)))
    return 0


def cmd_gen(args) -> int:
    if args.n < 1 or args.wmax < 1 or not 0.0 <= args.p <= 1.0:
        raise UsageError("need --n >= 1, --wmax >= 1 and 0 <= --p <= 1")
    g = generate_gnp(args.n, args.p, args.wmax, args.seed)
    comment = f"gnp n={args.n} p={args.p} wmax={args.wmax} seed={args.seed}"
    text = format_instance(g, comments=(comment,))
    if args.output:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    if args.trials < 0 or args.max_n < 1:
        raise UsageError("need --trials >= 0 and --max-n >= 1")
    return 0 if run_verification(args.trials, args.max_n, args.seed) else 1


def cmd_bench(args) -> int:
    if args.input:
        g = read_instance(args.input)
        if not g.directed:
            raise UsageError("bench expects a directed instance")
    else:
        g = generate_gnp(args.n, args.p, args.wmax, args.seed)
    paths = list(Via) if args.via == "both" else [Via(args.via)]
    rows = bench.run_bench(g, args.variant, paths, args.backend)
    print(f"instance n={g.n} m={g.m} w(V)={g.total_weight} variant={args.variant} backend={args.backend}")
    print("\n".join(bench.format_rows(rows)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vcreduce",
        description="Directed vertex connectivity via reduction to undirected graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="print the reduced undirected instance")
    p.add_argument("input", nargs="?", default="-", help="directed instance file ('-' for stdin)")
    p.set_defaults(func=cmd_reduce)

    variant_help = "global | pair S T | source S | sink T | steiner V1,V2,... | all-pairs"
    p = sub.add_parser("solve", help="solve a vertex-cut variant")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--variant", nargs="+", default=["global"], metavar="ARG", help=variant_help)
    p.add_argument("--via", choices=[v.value for v in Via], default="reduction")
    p.add_argument("--backend", choices=BACKENDS, default="dinic")
    p.add_argument("--witness", action="store_true", help="also print the cut sides")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="brute-force a vertex-cut variant")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--variant", nargs="+", default=["global"], metavar="ARG", help=variant_help)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--max-n", type=int, default=OracleBudget().max_n)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a random directed instance")
    p.add_argument("--model", choices=["gnp"], default="gnp")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--wmax", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="cross-check all identities on random instances")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the reduction and direct paths")
    p.add_argument("--input")
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--wmax", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--variant", choices=KINDS, default="global")
    p.add_argument("--via", choices=["reduction", "direct", "both"], default="both")
    p.add_argument("--backend", choices=BACKENDS, default="dinic")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (VertexCutError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
