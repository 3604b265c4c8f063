"""Exception types shared across the package."""


class PentagonError(Exception):
    """Base class for every error raised by this package."""


class IndexOutOfRange(PentagonError, ValueError):
    pass


class SelfLoop(PentagonError, ValueError):
    pass


class EmptySide(PentagonError, ValueError):
    pass


class NotDisjoint(PentagonError, ValueError):
    pass


class DomainError(PentagonError, ValueError):
    pass


class PreconditionViolated(PentagonError, ValueError):
    """An input does not meet an algorithm's stated preconditions.

    ``vertex`` names the offending vertex when the failure is a degree bound.
    """

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class InputContainsC5(PentagonError):
    """The input graph contains an induced pentagon; ``cycle`` is the certificate."""

    def __init__(self, cycle, message=None):
        self.cycle = tuple(cycle)
        super().__init__(message or f"input contains an induced C5: {list(self.cycle)}")


class NotCograph(PentagonError, ValueError):
    """Raised when a cotree is requested for a graph with an induced P4."""

    def __init__(self, p4):
        self.p4 = tuple(p4)
        super().__init__(f"graph is not a cograph; induced P4 on {list(self.p4)}")


class InternalAssertionFailed(PentagonError, AssertionError):
    pass


class SizeLimitExceeded(PentagonError, ValueError):
    pass


class IterationCapExceeded(PentagonError, RuntimeError):
    pass
