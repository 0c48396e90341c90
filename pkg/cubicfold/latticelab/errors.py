"""Module containing the errors raised by the lattice layer"""
from ..utils.errors import CubicfoldError


class NonSymmetricGramError(CubicfoldError, ValueError):
    """Raised when a Gram matrix is not square and symmetric"""
    pass


class IndefiniteLatticeError(CubicfoldError, ValueError):
    """Raised when an operation needs a positive-definite lattice"""
    pass
