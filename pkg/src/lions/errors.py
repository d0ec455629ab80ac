"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class LionsError(Exception):
    """Base class for all package errors."""


class InvalidSetError(LionsError, ValueError):
    """A vertex set mentions an index outside ``[0, n)``."""


class InvalidParameterError(LionsError, ValueError):
    pass


class ContainmentError(LionsError, ValueError):
    """A claimed subgraph is not contained in its host."""


class DomainError(LionsError, ValueError):
    """Input outside the domain of an operation (disconnected graph, non-tree, ...)."""


class IllegalMoveError(LionsError, ValueError):
    def __init__(self, message: str, step: int | None = None, lion: int | None = None):
        self.step = step
        self.lion = lion
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)


class RestrictionError(LionsError, ValueError):
    pass


class PreconditionError(LionsError, ValueError):
    def __init__(self, message: str, step: int | None = None):
        self.step = step
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)


class DecompositionError(LionsError, ValueError):
    """A path decomposition failed validation."""

    def __init__(self, message: str, violations=()):
        self.violations = list(violations)
        super().__init__(message)


class SynthesisError(LionsError, RuntimeError):
    pass


class SizeGuardError(LionsError):
    """Instance too large for an exponential routine; pass an explicit override."""


class BudgetExceeded(LionsError):
    """A search ran out of its node budget; the answer is unknown, not negative."""

    def __init__(self, message: str, nodes: int):
        self.nodes = nodes
        super().__init__(message)


class ParseError(LionsError, ValueError):
    def __init__(self, message: str, location: str | None = None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
