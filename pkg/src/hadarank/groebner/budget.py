"""Step budgets for Groebner computations."""

from ..errors import BudgetExceeded

DEFAULT_STEP_BUDGET = 10**6


class Budget:
    """Caps reduction steps per Groebner basis; ``total`` accumulates across runs."""

    def __init__(self, cap: int | None = None):
        self.cap = DEFAULT_STEP_BUDGET if cap is None else int(cap)
        self.spent = 0
        self.total = 0

    def start(self):
        self.spent = 0

    def spend(self, n: int = 1):
        self.spent += n
        self.total += n
        if self.spent > self.cap:
            raise BudgetExceeded(f"step budget of {self.cap} exceeded", spent=self.total)


    def credit(self, n: int) -> None:
        """Attribute ``n`` steps of a reused result to the total, without touching the cap."""
        self.total += n


def as_budget(budget) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)
