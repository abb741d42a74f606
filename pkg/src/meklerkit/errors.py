"""Shared exception types.

Budget overflows are deliberate, loud failures: they mean a computation was
refused because it would exceed a configured resource bound, which is a
different outcome from a semantic negative ("no isomorphism", "no witness").
"""


class BudgetError(Exception):
    """A configured resource budget would be exceeded; no partial answer."""


class VertexBudgetError(BudgetError):
    """Graph extension would create more vertices than the budget allows."""


class EnumerationBudgetError(BudgetError):
    """Group element enumeration would exceed the element budget."""


class PointBudgetError(BudgetError):
    """A permutation ground set would exceed the point budget."""


class ParseError(ValueError):
    """Malformed artifact text; carries a line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
