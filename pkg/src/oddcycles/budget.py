from __future__ import annotations

from typing import Optional


class BudgetExceeded(RuntimeError):
    """A search ran past its node budget; no answer is given."""


class Budget:
    """Node counter shared by one search. ``limit=None`` means unbounded."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: Optional[int] = None):
        self.limit = limit
        self.used = 0

    def tick(self, amount: int = 1) -> None:
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"node budget of {self.limit} exceeded")


def as_budget(budget: "Budget | int | None") -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)
