"""Exception types shared across the package."""


class HamCompletionError(Exception):
    """Base class for all package errors."""


class InvalidEdge(HamCompletionError, ValueError):
    pass


class InvalidVertex(HamCompletionError, ValueError):
    pass


class InvalidSpec(HamCompletionError, ValueError):
    pass


class ParseError(HamCompletionError, ValueError):
    pass


class TooSmallForCycle(HamCompletionError, ValueError):
    """A spanning cycle needs at least three vertices."""


class Inconsistent(HamCompletionError, ValueError):
    pass


class UnsupportedClass(HamCompletionError):
    """The instance matches none of the families with a known formula."""


class BudgetExceeded(HamCompletionError):
    def __init__(self, budget: int):
        super().__init__(f"minimum exceeds budget of {budget} added edges")
        self.budget = budget


class ValidationFailure(HamCompletionError):
    """A constructed plan failed its own witness check (internal bug)."""
