"""Exception hierarchy shared by all modules."""


class FourSquaresError(Exception):
    """Base class for every error raised by this package."""


class CapacityError(FourSquaresError, OverflowError):
    """A value would leave the signed 64-bit range the kernels work in."""


class NotCoprimeError(FourSquaresError, ValueError):
    pass


class ShapeViolationError(FourSquaresError, ValueError):
    """(Z/cZ)^x is not cyclic; ``factorization`` holds the evidence."""

    def __init__(self, message, factorization=None):
        super().__init__(message)
        self.factorization = factorization


class UnsupportedShapeError(FourSquaresError, ValueError):
    pass


class InvalidWitnessError(FourSquaresError, ValueError):
    pass
