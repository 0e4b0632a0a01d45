"""Exception types raised by the library."""


class CyclicError(Exception):
    """Base class for all domain errors."""


class CycleParseError(CyclicError, ValueError):
    """Malformed cycle text or table.

    ``position`` is the 0-based index of the offending symbol, when known.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class NotRealizable(CyclicError):
    """The requested realization does not exist (last signature bit is 0)."""


class RotationCycleError(CyclicError):
    """A rotation cycle was passed where descent >= 2 is required."""


class NotAdmissible(CyclicError):
    """A fixed-point distribution or deployment vector fails admissibility.

    ``clause`` names the violated condition.
    """

    def __init__(self, message, clause):
        super().__init__(message)
        self.clause = clause


class ShiftOutOfRange(CyclicError):
    pass


class DegreeTooSmall(CyclicError):
    pass


class BudgetExceeded(CyclicError, ValueError):
    """A search would exceed its configured size limit."""


class InvariantError(AssertionError):
    """An internal invariant guaranteed by theory was violated."""
