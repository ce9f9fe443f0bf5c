"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input does not satisfy an operation's preconditions."""


class CapExceeded(RuntimeError):
    """An exhaustive enumeration was refused because the input is too large.

    The ``cap`` and ``size`` attributes say what limit was hit; callers can
    retry with a larger cap or switch to a criterion-based method.
    """

    def __init__(self, message: str, *, size: int, cap: int) -> None:
        super().__init__(message)
        self.size = size
        self.cap = cap


class DecompositionError(RuntimeError):
    """A sphere split produced something other than two pieces."""
