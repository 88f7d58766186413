class BettiLabError(Exception):
    """Base class for every error raised by the algebra package."""


class ValidationError(BettiLabError, ValueError):
    pass


class UnsupportedFamilyError(ValidationError):
    pass


class ShapeError(BettiLabError):
    pass


class CapExceededError(BettiLabError):
    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: {n} vertices exceeds cap {cap}")
        self.n = n
        self.cap = cap


class OracleBudgetError(BettiLabError):
    """A Koszul strand is larger than the configured nonzero budget."""

    def __init__(self, i: int, j: int, d: int, estimate: int, budget: int):
        super().__init__(
            f"oracle out of budget at (i={i}, j={j}, d={d}): "
            f"estimated {estimate} nonzeros > {budget}"
        )
        self.i = i
        self.j = j
        self.d = d
        self.estimate = estimate
        self.budget = budget


class ExponentOverflowError(BettiLabError, OverflowError):
    pass
