"""Shared error types."""

from __future__ import annotations


class BudgetError(RuntimeError):
    """An exact computation would exceed its configured budget.

    ``detail`` records the truncation that was attempted (depth, bound,
    element cap, ...) so callers can retry with a tighter request instead
    of guessing.
    """

    def __init__(self, message: str, **detail):
        super().__init__(message)
        self.detail = detail
