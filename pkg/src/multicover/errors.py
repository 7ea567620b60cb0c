"""Exception hierarchy shared across the package."""

from __future__ import annotations


class MulticoverError(Exception):
    """Base class for all library-specific errors."""


class IndexOutOfRange(MulticoverError):
    """A vertex or edge index falls outside [1..n] / [1..m]."""


class EmptyEdge(MulticoverError):
    """An edge contains no vertices."""


class EmptyEdgeList(MulticoverError):
    """A hypergraph was given zero edges."""


class DuplicateVertexInEdge(MulticoverError):
    """An edge lists the same vertex twice."""


class DimensionMismatch(MulticoverError):
    """Paired objects (hypergraph / demands / cover) disagree on size."""


class InfeasibleInstance(MulticoverError):
    """Some vertex cannot reach its demand even with every edge chosen.

    Attributes:
        vertex: 1-based index of the first offending vertex, when known.
    """

    def __init__(self, message: str, vertex: int | None = None):
        super().__init__(message)
        self.vertex = vertex


class LpInfeasible(MulticoverError):
    """The LP relaxation has no feasible point (defensive; validation
    should catch this first)."""


class EpsilonOutOfRange(MulticoverError):
    """epsilon violates the admissible interval for the given delta and k.

    Attributes:
        low, high_kth_power: the admissible interval is
        [low, high_kth_power**(1/k)] expressed via exact rationals.
    """

    def __init__(self, message: str, low=None, high_kth_power=None):
        super().__init__(message)
        self.low = low
        self.high_kth_power = high_kth_power


class RepairImpossible(MulticoverError):
    """Greedy repair ran out of deficit-reducing edges (defensive)."""


class BudgetExceeded(MulticoverError):
    """Branch-and-bound hit its node budget before certifying optimality.

    Attributes:
        partial: the best (non-certified) ExactResult found so far.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class ParseError(MulticoverError):
    """Instance text violates the file grammar.

    Attributes:
        line: 1-based line number of the offending line, when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GenerationFailed(MulticoverError):
    """The random instance generator exhausted its retry budget."""


class InternalInvariantViolation(MulticoverError):
    """A property the algorithms guarantee was observed to fail;
    indicates an implementation bug, not a user error."""
