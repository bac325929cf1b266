"""Exception types raised by the library."""


class GadicError(Exception):
    """Base class for domain errors."""


class InvalidBaseError(GadicError, ValueError):
    def __init__(self, base):
        super().__init__(f"base must be an integer >= 2, got {base!r}")
        self.base = base


class UnreachableError(GadicError):
    """No representation was found within the configured search depth."""

    def __init__(self, n, depth, cap):
        super().__init__(
            f"{n} has no representation of length <= {depth} "
            f"with exponents <= {cap}")
        self.n = n
        self.depth = depth
        self.cap = cap


class NotAComplementError(GadicError, ValueError):
    pass


class NotAMemberError(GadicError, ValueError):
    pass
