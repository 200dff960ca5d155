"""Exception types shared across the package."""


class CapacityError(ValueError):
    """A request exceeds a configured size ceiling."""

    def __init__(self, what: str, n: int, ceiling: int):
        super().__init__(
            f"{what}: n={n} exceeds the configured ceiling {ceiling} "
            f"(raise it explicitly to proceed)"
        )
        self.n = n
        self.ceiling = ceiling


class FormulaError(ArithmeticError):
    """A closed-form evaluation produced an inexact division."""


class TheoremViolation(AssertionError):
    """A computed structure disagrees with a proven structural statement."""
