"""Exception types shared across the package."""


class LatcubeError(Exception):
    """Base class for every error raised by latcube."""


class ZeroInput(LatcubeError, ValueError):
    pass


class NotRepresentable(LatcubeError, ValueError):
    """The integer is not a sum of the requested number of squares."""

    def __init__(self, m, k, reason=""):
        self.m = m
        self.k = k
        self.reason = reason
        msg = f"{m} is not a sum of {k} squares"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


class InvalidDimensions(LatcubeError, ValueError):
    pass


class NotMember(LatcubeError, ValueError):
    """Raised when no cube exists; carries the classification verdict."""

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(verdict.reason)


class DimensionMismatch(LatcubeError, ValueError):
    pass


class TooLarge(LatcubeError, ValueError):
    pass


class NotOrthogonal(LatcubeError, ValueError):
    pass


class ZeroVector(LatcubeError, ValueError):
    pass


class PreconditionViolated(LatcubeError, ValueError):
    pass


class BudgetExceeded(LatcubeError, ValueError):
    pass


class WitnessParseError(LatcubeError, ValueError):
    def __init__(self, message, line, column=1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
