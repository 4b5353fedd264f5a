"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of a function or model type."""


class AccuracyError(ArithmeticError):
    """A numerical routine failed to reach its requested accuracy.

    The best available estimate and its error bound are kept on the
    instance so callers can decide whether to accept them.
    """

    def __init__(self, message, estimate=float("nan"), error=float("inf")):
        super().__init__(message)
        self.estimate = estimate
        self.error = error
