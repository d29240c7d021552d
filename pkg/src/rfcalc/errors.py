"""Exception types shared across the package.

Domain and argument problems subclass ValueError so callers that only know
the standard library still catch them.  Evaluation-time failures carry the
offending point so diagnostics can name it.
"""

from __future__ import annotations


class InvalidArgumentError(ValueError):
    """An argument violates a precondition (bad tolerance, bad grid, ...)."""


class DomainError(ValueError):
    """A mathematical function was asked for a value outside its domain."""


class ParseError(ValueError):
    """Expression text failed to parse.

    Attributes:
        offset: byte offset into the source where the problem was found.
    """

    def __init__(self, offset: int, message: str):
        self.offset = offset
        super().__init__(f"parse error at offset {offset}: {message}")


class EvaluationError(RuntimeError):
    """A function produced a non-finite or undefined value at some point."""

    def __init__(self, point: float, message: str = ""):
        self.point = point
        detail = message or "evaluation failed"
        super().__init__(f"{detail} at t={point!r}")


class DivergenceError(RuntimeError):
    """An improper integral was flagged as divergent."""


class HypothesisViolation(RuntimeError):
    """A theorem checker found its stated hypothesis false at some point."""

    def __init__(self, point: float, message: str):
        self.point = point
        super().__init__(f"{message} (at x={point!r})")
