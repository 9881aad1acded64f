"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A parameter violates its documented precondition."""


class DomainError(ValueError):
    """A scalar argument is outside the mathematical domain of the function."""


class EigensolverError(RuntimeError):
    """Eigenvalue iteration failed to converge."""

    def __init__(self, order, detail=""):
        self.order = order
        super().__init__(f"eigensolver failed for order-{order} matrix: {detail}")


class ConfigError(Exception):
    """An experiment configuration is malformed or inconsistent."""
