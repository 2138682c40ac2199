"""Shared exception types.

Everything a caller can trigger with bad input derives from ValueError so a
CLI or script can catch domain problems with a single `except` clause; range
violations use the builtin OverflowError.
"""


class ZeroInputError(ValueError):
    """Raised for n = 0: no prime factorization, eta is undefined there."""


class NotPrimeError(ValueError):
    """Raised when an argument that must be prime is not.

    Carries the offending value so parsers can point at the bad base.
    """

    def __init__(self, value: int, context: str = "p"):
        self.value = value
        super().__init__(f"{context} must be prime, got {value}")


class ExprSyntaxError(ValueError):
    """Malformed factored-integer expression; `position` is a 0-based index."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class SearchBudgetError(RuntimeError):
    """An exhaustive search or scan exceeded its configured budget."""
