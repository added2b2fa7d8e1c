"""Exception types shared across the package."""


class CycleLensError(Exception):
    """Base class for all library errors."""


class InvalidInput(CycleLensError, ValueError):
    pass


class NotPrimePower(InvalidInput):
    pass


class TooSmall(InvalidInput):
    pass


class NotTwoConnected(InvalidInput):
    pass


class WrongPairType(InvalidInput):
    pass


class BudgetExceeded(CycleLensError):
    """A configured work budget ran out before the computation finished."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class CapExceeded(BudgetExceeded):
    """Cycle enumeration visited more cycles than allowed.

    ``partial`` holds the spectrum gathered so far; it is not authoritative.
    """


class InvariantBreach(CycleLensError):
    """A computed result contradicts a property that must always hold."""
