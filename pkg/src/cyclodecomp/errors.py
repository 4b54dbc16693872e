"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Raised when a parameter fails its precondition (non-prime p, n out of range, ...)."""


class DomainError(ArithmeticError):
    """Raised when an arithmetic operation is undefined for its argument."""
