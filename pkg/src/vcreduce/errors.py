"""Exception hierarchy shared by every module."""

from __future__ import annotations


class VertexCutError(Exception):
    """Base class for all errors raised by vcreduce."""


class GraphError(VertexCutError, ValueError):
    """An input graph violates a structural invariant.

    ``line`` is set when the error was detected while parsing a file.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class SelfLoop(GraphError):
    pass


class DuplicateArc(GraphError):
    pass


class NonPositiveWeight(GraphError):
    pass


class WeightTooLarge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class CutError(VertexCutError, ValueError):
    """A proposed tri-partition is not a vertex cut of the graph."""


class NotTriPartition(CutError):
    pass


class EmptySide(CutError):
    pass


class CrossingEdge(CutError):
    def __init__(self, u: int, v: int):
        self.u, self.v = u, v
        super().__init__(f"edge ({u}, {v}) crosses from left to right")


class InvalidCut(CutError):
    pass


class QueryError(VertexCutError, ValueError):
    """A connectivity query is malformed for the given graph."""


class CompleteGraph(QueryError):
    pass


class SamePair(QueryError):
    pass


class AdjacentPair(QueryError):
    pass


class TerminalSetTooSmall(QueryError):
    pass


class EmptySet(QueryError):
    pass


class BudgetExceeded(VertexCutError):
    pass
