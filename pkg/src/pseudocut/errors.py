"""Exception hierarchy shared across the package.

Exit-code mapping used by the CLI: InputError -> 2, InfeasibleInstanceError -> 3,
ResourceError -> 4.
"""


class PseudocutError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PseudocutError):
    """Malformed input: bad ids, violated preconditions, unparsable files."""


class ForbiddenElementError(PseudocutError):
    """A candidate solution contains an element it is not allowed to use."""


class InfeasibleInstanceError(PseudocutError):
    """No feasible solution exists (e.g. a path consists only of forbidden elements)."""


class NoFiniteCutError(InfeasibleInstanceError):
    """A direct s-t edge makes every vertex cut infinite."""


class ResourceError(PseudocutError):
    """A configured budget (paths, B&B nodes, LP pivots, wall clock) was exhausted.

    ``incumbent`` optionally carries the best solution known at the point of
    interruption.
    """

    def __init__(self, message, incumbent=None):
        super().__init__(message)
        self.incumbent = incumbent


class BudgetExceededError(ResourceError):
    """Path-enumeration budget exceeded."""


class TimeBudgetExceededError(ResourceError):
    """Per-run wall-clock deadline passed."""
