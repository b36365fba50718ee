"""Shared exception types.

Exit-code mapping in the CLI: input/format problems -> 2, exceeded
budgets -> 3, broken internal invariants -> 4.
"""

from __future__ import annotations


class InputFormatError(ValueError):
    """Malformed input file or inconsistent input data."""


class BudgetExceededError(RuntimeError):
    """A hard size/time budget was exceeded; no partial answer is returned."""


class InvariantError(RuntimeError):
    """An internal consistency check failed."""


__all__ = ["InputFormatError", "BudgetExceededError", "InvariantError"]
