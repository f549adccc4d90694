"""Shared exception types."""


class BudgetError(RuntimeError):
    """An enumeration would exceed its configured work budget."""
