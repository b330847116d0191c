"""Exception types shared across the package."""

from __future__ import annotations


class GroupCodesError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class ParseError(GroupCodesError, ValueError):
    """An expression or spec string could not be parsed."""

    code = "parse"

    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.message = message
        self.position = position
        self.text = text
        where = "" if position is None else f" at position {position}"
        super().__init__(f"{message}{where}")


class BudgetExceededError(GroupCodesError):
    """An exhaustive enumeration would exceed its budget.

    Raised instead of returning an estimate.
    """

    code = "budget"

    def __init__(self, required: int, budget: int, what: str = "codewords"):
        self.required = required
        self.budget = budget
        super().__init__(f"enumeration of {required} {what} exceeds budget {budget}")


class ZeroCodeError(GroupCodesError, ValueError):
    """Minimum distance requested for the zero code."""

    code = "zero-code"


class VerificationError(GroupCodesError, AssertionError):
    """A checked algebraic identity failed on a concrete instance."""

    code = "verification"
