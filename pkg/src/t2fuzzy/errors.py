"""Exception types raised by the library."""


class T2FuzzyError(ValueError):
    """Base class for all library errors."""


class DomainError(T2FuzzyError):
    """A point or grade lies outside [0, 1]."""


class EmptyIntervalError(T2FuzzyError):
    """A supremum was requested over an empty set."""


class NotNormalError(T2FuzzyError):
    """The function does not reach supremum 1."""


class NotInLError(T2FuzzyError):
    """The function is not normal and convex."""


class PreconditionError(T2FuzzyError):
    """An operation was called outside its stated precondition."""


class UnknownNameError(T2FuzzyError, KeyError):
    """A registry lookup (t-norm, suite, law) failed."""

    def __str__(self):
        return ValueError.__str__(self)


class DocumentError(T2FuzzyError):
    """A function or interval document could not be parsed or validated."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{position}: {message}"
        super().__init__(message)
