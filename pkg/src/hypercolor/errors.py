"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class HypercolorError(Exception):
    """Base class for all library errors."""


class ValidationError(HypercolorError, ValueError):
    def __init__(self, message: str, class_index: int | None = None):
        super().__init__(message)
        self.class_index = class_index


class DimensionError(ValidationError):
    pass


class RowSumError(ValidationError):
    pass


class IllegalMoveError(HypercolorError, ValueError):
    """A move whose source or partner vertices do not exist."""


class UnsupportedRegimeError(HypercolorError):
    """No closed-form construction is known for the requested instance."""


class InfeasibleTotalsError(HypercolorError, ValueError):
    pass


class BudgetExceededError(HypercolorError):
    def __init__(self, required: int, budget: int):
        super().__init__(
            f"enumeration needs {required} count vectors, budget is {budget}"
        )
        self.required = required
        self.budget = budget
