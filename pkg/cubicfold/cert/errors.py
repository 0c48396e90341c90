"""Module containing the errors raised by the finite-field certification engine"""
from ..utils.errors import CubicfoldError


class BadPrimeError(CubicfoldError, ValueError):
    """Raised when a prime cannot be used for a specialization, e.g. p = 3 or a denominator divisible by p"""
    pass


class DegeneratePlaneError(CubicfoldError, ValueError):
    """Raised when the basis of a plane has rank below 3"""
    pass


class LineNotContainedError(CubicfoldError, ValueError):
    pass


class SingularSpecializationError(CubicfoldError, ArithmeticError):
    """Raised when a reduction mod p is singular so that counts over F_p are unreliable"""
    pass
