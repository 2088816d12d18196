from __future__ import annotations

import os

__all__ = ["BudgetExceeded", "DEFAULT_BUDGET", "BUDGET_ENV", "default_budget", "Budget"]

BUDGET_ENV = "UNITARY_EULER_BUDGET"
DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """An oracle computation would exceed its configured work budget."""


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


class Budget:
    """Counter of elementary steps with a hard ceiling."""

    def __init__(self, limit: int | None = None):
        self.limit = default_budget() if limit is None else limit
        self.used = 0

    def require(self, amount: int, what: str) -> None:
        """Fail up front if a single quantity is already too large."""
        if amount > self.limit:
            raise BudgetExceeded(f"{what} = {amount} exceeds budget {self.limit}")

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(f"work budget {self.limit} exhausted")
