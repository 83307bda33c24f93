"""Exception types shared across the package."""


class TsrError(Exception):
    """Base class for all package errors."""


class GraphError(TsrError):
    """Base class for graph construction problems."""


class LoopEdge(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(GraphError):
    """The same unordered vertex pair appears twice in the edge list."""


class VertexOutOfRange(GraphError):
    """An edge endpoint or vertex argument is not in [0, n)."""


class RadiusTooSmall(TsrError):
    """The distance radius r is below the smallest supported value."""


class DegenerateGraph(TsrError):
    """The graph's maximum degree is too small for the randomized machinery."""


class ParameterOutOfRange(TsrError):
    """A numeric argument violates its precondition."""


class NoTrials(TsrError):
    """A Monte-Carlo estimate was requested with zero trials."""


class ResampleBudgetExceeded(TsrError):
    """No sampled ordering satisfied every tracked property within the budget.

    Carries the report of the last attempt plus the best ordering seen,
    so callers can inspect which properties kept failing or proceed with
    the least-bad ordering anyway.
    """

    def __init__(self, message, last_report=None, best_ordering=None,
                 best_report=None, attempts=0):
        super().__init__(message)
        self.last_report = last_report
        self.best_ordering = best_ordering
        self.best_report = best_report
        self.attempts = attempts


class InfeasibleTarget(TsrError):
    """A requested weight target lies outside the feasible interval."""


class EscalationCapExceeded(TsrError):
    """The colouring still failed after the maximum number of palette doublings."""


class SearchBudgetExceeded(TsrError):
    """The exact search hit its node budget before finding an answer.

    Distinct from "no colouring exists": the search was cut short.
    """


class InvalidArgs(TsrError):
    """Command-line arguments are structurally invalid."""


class ParseError(TsrError):
    """A graph or colouring file does not match the expected format."""
