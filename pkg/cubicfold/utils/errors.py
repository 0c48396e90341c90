"""Module containing the base errors shared across cubicfold"""


class CubicfoldError(Exception):
    """Base class for all errors raised deliberately by cubicfold"""
    pass


class BudgetExceededError(CubicfoldError):
    """Raised when an enumeration would exceed the configured work budget"""

    def __init__(self, what: str, required: int, budget: int):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(f'{what} needs {required} work units but the budget is {budget}')


def ensure_within_budget(what: str, required: int, budget: int) -> None:
    """Raises a BudgetExceededError if required exceeds budget"""
    if required > budget:
        raise BudgetExceededError(what=what, required=required, budget=budget)
