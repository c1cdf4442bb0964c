"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """A search or expansion would exceed its configured candidate budget.

    Callers treat this as "indeterminate", never as a negative answer.
    """
