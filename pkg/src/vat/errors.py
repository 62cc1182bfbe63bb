"""Exception types shared across the package."""


class VatError(Exception):
    pass


class ParameterError(VatError, ValueError):
    """Invalid parameters for a constructor or operation."""


class DomainError(VatError, ValueError):
    """Input lies outside the domain where a parameter is defined."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class Graph6Error(VatError, ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class BudgetExceeded(VatError, RuntimeError):
    """A configured node/edge/order/time cap was hit; the answer is unknown."""
