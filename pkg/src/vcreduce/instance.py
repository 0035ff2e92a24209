"""Instance files and the seeded random instance generator.

File format (vertices 1-based, single spaces, ``\\n`` line endings)::

    c optional comment, allowed on any line
    p dvc <n> <m>        # or ``p uvc`` for an undirected instance
    w <v> <weight>       # optional; missing vertices weigh 1
    a <u> <v>            # exactly m arc lines (``e <u> <v>`` when undirected)
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

from .errors import DuplicateArc, GraphError, NonPositiveWeight, SelfLoop, VertexOutOfRange
from .graph import DirectedGraph, Graph, UndirectedGraph


class ParseError(GraphError):
    pass


def parse_instance(text: str) -> Graph:
    """Parse an instance; errors carry the offending 1-based line number."""
    n = m = None
    directed = True
    weights: list[int] = []
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    weighted: set[int] = set()

    def vertex(token: str, lineno: int) -> int:
        try:
            v = int(token)
        except ValueError:
            raise ParseError(f"vertex {token!r} is not an integer", lineno) from None
        if not 1 <= v <= n:
            raise VertexOutOfRange(f"vertex {v} outside [1, {n}]", lineno)
        return v - 1

    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("dvc", "uvc"):
                raise ParseError("expected 'p dvc <n> <m>' or 'p uvc <n> <m>'", lineno)
            try:
                n, m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError("n and m must be integers", lineno) from None
            if n < 1 or m < 0:
                raise ParseError(f"need n >= 1 and m >= 0, got n={n} m={m}", lineno)
            directed = tokens[1] == "dvc"
            weights = [1] * n
            continue
        if n is None:
            raise ParseError(f"{kind!r} line before the problem line", lineno)
        if kind == "w":
            if len(tokens) != 3:
                raise ParseError("expected 'w <v> <weight>'", lineno)
            v = vertex(tokens[1], lineno)
            if v in weighted:
                raise ParseError(f"second weight line for vertex {v + 1}", lineno)
            try:
                w = int(tokens[2])
            except ValueError:
                raise ParseError(f"weight {tokens[2]!r} is not an integer", lineno) from None
            if w < 1:
                raise NonPositiveWeight(f"weight of vertex {v + 1} is {w}, must be >= 1", lineno)
            weights[v] = w
            weighted.add(v)
        elif kind in ("a", "e"):
            expected = "a" if directed else "e"
            if kind != expected:
                raise ParseError(f"'{kind}' line in a '{'dvc' if directed else 'uvc'}' instance", lineno)
            if len(tokens) != 3:
                raise ParseError(f"expected '{kind} <u> <v>'", lineno)
            u, v = vertex(tokens[1], lineno), vertex(tokens[2], lineno)
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u + 1}", lineno)
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateArc(f"duplicate {'arc' if directed else 'edge'} ({u + 1}, {v + 1})", lineno)
            seen.add(key)
            pairs.append((u, v))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)

    if n is None:
        raise ParseError("missing problem line")
    if len(pairs) != m:
        raise ParseError(f"problem line declares m={m} but found {len(pairs)} {'arc' if directed else 'edge'} lines")
    cls = DirectedGraph if directed else UndirectedGraph
    return cls(n, pairs, weights)


def format_instance(g: Graph, comments: tuple[str, ...] = ()) -> str:
    """Serialize ``g``; pairs are written in the graph's stored order."""
    lines = [f"c {c}" if c else "c" for c in comments]
    lines.append(f"p {'dvc' if g.directed else 'uvc'} {g.n} {g.m}")
    lines += [f"w {v + 1} {w}" for v, w in enumerate(g.weights) if w != 1]
    tag = "a" if g.directed else "e"
    lines += [f"{tag} {u + 1} {v + 1}" for u, v in (g.arcs if g.directed else g.edges)]
    return "\n".join(lines) + "\n"


def read_instance(path: str | Path) -> Graph:
    if str(path) == "-":
        return parse_instance(sys.stdin.read())
    return parse_instance(Path(path).read_text())


def generate_gnp(n: int, p: float, wmax: int = 1, seed: int = 0) -> DirectedGraph:
    """Random digraph where each ordered pair is an arc with probability ``p``.

    Uses ``random.Random(seed)`` (Mersenne Twister).  Draw order is fixed:
    one ``random()`` per ordered pair ``(u, v)``, ``u != v``, in
    lexicographic order, then one ``randint(1, wmax)`` per vertex in
    ascending order.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if wmax < 1:
        raise ValueError(f"wmax must be >= 1, got {wmax}")
    rng = random.Random(seed)
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    weights = [rng.randint(1, wmax) for _ in range(n)]
    return DirectedGraph(n, arcs, weights)
