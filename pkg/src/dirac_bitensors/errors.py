class DomainError(ValueError):
    """An argument lies outside the domain an operation accepts."""


class NumericError(ArithmeticError):
    """A numerical routine failed to converge at working precision."""
