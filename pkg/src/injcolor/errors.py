"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class InjColorError(Exception):
    """Base class for all errors raised by injcolor."""


# graph construction / structure

class GraphError(InjColorError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class SameEdge(GraphError):
    pass


class NotBipartite(GraphError):
    """Raised by :func:`injcolor.graph.bipartition`; ``witness`` is an odd cycle."""

    def __init__(self, witness):
        self.witness = list(witness)
        super().__init__(f"graph is not bipartite (odd cycle {self.witness})")


# colorings

class ColoringError(InjColorError, ValueError):
    pass


class PartialColoring(ColoringError):
    pass


class NotInjective(ColoringError):
    pass


class NotStarColoring(ColoringError):
    pass


# solvers

class NoEdges(InjColorError, ValueError):
    pass


class TooLarge(InjColorError, ValueError):
    pass


# constructive bounds

class PreconditionError(InjColorError, ValueError):
    """A constructive method was called outside its hypothesis."""


class NotPathOrCycle(PreconditionError):
    pass


class NotForest(PreconditionError):
    pass


class DegreeTooSmall(PreconditionError):
    pass


class DegreeTooLarge(PreconditionError):
    pass


class IsolatedVertex(PreconditionError):
    pass


class PreconditionViolated(PreconditionError):
    pass


class ReductionStalled(InjColorError):
    """No reducible configuration applies to a non-empty working graph."""


class ExtensionFailed(InjColorError, AssertionError):
    """A reduction step could not be undone with the allowed palette.

    This is an internal invariant failure, never a property of the input.
    """


# corpus / io

class UnknownName(InjColorError, KeyError):
    pass


class FixtureError(InjColorError, AssertionError):
    pass


class ParseError(InjColorError, ValueError):
    def __init__(self, message: str, line: int | None = None, position: int | None = None):
        self.line = line
        self.position = position
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"byte {position}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(message + suffix)


class FormatViolation(ParseError):
    pass
