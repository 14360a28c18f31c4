"""Enumeration budget.

Exhaustive point counting and field enumeration refuse to start jobs
larger than the budget.  The default is 2**26 evaluations; the
MOTIVIC_BUDGET environment variable overrides it.
"""

from __future__ import annotations

import os

from .errors import BudgetExceededError

DEFAULT_BUDGET = 1 << 26

ENV_VAR = "MOTIVIC_BUDGET"


def enumeration_budget() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise BudgetExceededError(
            f"{ENV_VAR} must be an integer, got {raw!r}", 0, 0
        ) from None
    if value <= 0:
        raise BudgetExceededError(f"{ENV_VAR} must be positive", 0, value)
    return value


def charge(needed: int, what: str) -> None:
    """Raise BudgetExceededError if `needed` evaluations exceed the budget."""
    budget = enumeration_budget()
    if needed > budget:
        raise BudgetExceededError(
            f"{what} needs {needed} evaluations, budget is {budget}",
            needed,
            budget,
        )
