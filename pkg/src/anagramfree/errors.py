"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Malformed argument: wrong length, out-of-range symbol, bad graph."""


class PreconditionError(ValueError):
    """Argument is well formed but violates an operation's precondition."""


class BudgetExceededError(RuntimeError):
    """A bounded search hit its node budget before finishing."""

    def __init__(self, budget, what="search"):
        super().__init__(f"{what} exceeded its budget of {budget} nodes")
        self.budget = budget


class EnumerationOverflowError(RuntimeError):
    """Simple-path enumeration produced more paths than the cap allows."""

    def __init__(self, cap):
        super().__init__(f"path enumeration exceeded cap={cap}")
        self.cap = cap
