"""Module containing the errors raised by the automorphism layer"""
from ..utils.errors import CubicfoldError


class NotSemiInvariantError(CubicfoldError, ValueError):
    """Raised when a form is not mapped to a multiple of itself"""
    pass


class OrderCapExceededError(CubicfoldError):
    """Raised when no power up to the cap is scalar"""
    pass


class GroupCapExceededError(CubicfoldError):
    """Raised when a closure grows past its cap"""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f'group closure exceeded the cap of {cap} elements')


class NonInvertibleAutomorphismError(CubicfoldError, ValueError):
    pass


class SymmetryNotFoundError(CubicfoldError):
    """Raised when no monomial symmetry with the requested shape exists"""
    pass
