"""Exception hierarchy."""


class MorseResError(Exception):
    """Base class for every error raised by this package."""


class LengthMismatchError(MorseResError, ValueError):
    pass


class SetupViolation(MorseResError, ValueError):
    """An ideal violates the standing hypotheses of the operation.

    ``clause`` names the violated hypothesis so callers can report it.
    """

    def __init__(self, message, clause=None):
        super().__init__(message)
        self.clause = clause


class DuplicateGeneratorError(SetupViolation):
    """Repeated generators where a minimal generating set is required."""


class IndexOutOfRange(MorseResError, IndexError):
    pass


class WidthLimitExceeded(MorseResError):
    """Too many generators to enumerate all ``2**q`` subsets."""


class MalformedEdgeError(MorseResError, ValueError):
    """A matching edge is not a covering pair ``(T, T - {j})``."""


class SizeMismatchError(MorseResError, ValueError):
    pass


class NotInFiberError(MorseResError, ValueError):
    pass


class NotMinimalError(MorseResError):
    """A matching fails the minimality check, so its cell counts are only an upper bound."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ClosedFormNotApplicable(MorseResError):
    pass


class FaceBudgetExceeded(MorseResError):
    pass


class CharacteristicMismatch(MorseResError):
    """Betti numbers differ between two prime fields."""

    def __init__(self, message, differences):
        super().__init__(message)
        self.differences = differences


class UnsupportedError(MorseResError):
    """Outside the range where the construction is known to work."""
