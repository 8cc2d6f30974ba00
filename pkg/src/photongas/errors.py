"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument lies outside the mathematical domain of an operation."""


class DivergenceError(ValueError):
    """The requested quantity is a divergent limit (e.g. Li_1 at z = 1)."""


class MassParseError(ValueError):
    """A mass string could not be parsed."""


class RegimeError(ValueError):
    """An asymptotic formula was requested outside its regime of validity."""


class ConvergenceError(RuntimeError):
    """A series or quadrature did not reach the requested tolerance.

    Carries the best available estimate so callers can inspect how far the
    computation got before giving up.
    """

    def __init__(self, message, value=None, error=None, terms=None):
        super().__init__(message)
        self.value = value
        self.error = error
        self.terms = terms
