"""Exception hierarchy shared by all modules."""


class PreconditionError(ValueError):
    """An input violates the documented precondition of an operation."""


class ParameterError(PreconditionError):
    """Jacobi parameters outside alpha, beta > -1."""


class DegenerateInputError(PreconditionError):
    """Repeated nodes or otherwise degenerate geometry."""


class DomainError(PreconditionError):
    """A value outside the mathematical domain (e.g. log of a non-positive)."""


class NumericalError(ArithmeticError):
    """An iterative numerical procedure failed."""


class ConvergenceError(NumericalError):
    """Iteration limit reached; ``last`` holds the final iterate, if any."""

    def __init__(self, message, last=None):
        super().__init__(message)
        self.last = last
