"""Module containing the errors raised by the polynomial layer"""
from ..utils.errors import CubicfoldError


class DimensionMismatchError(CubicfoldError, ValueError):
    """Raised when matrix, point or section sizes disagree with a variable count"""
    pass


class PolynomialSyntaxError(CubicfoldError, ValueError):
    """Raised by the parser; carries the character position of the failure"""

    def __init__(self, message: str, position: int, text: str = ''):
        self.position = position
        self.text = text
        super().__init__(f'{message} at position {position}')


class UnknownVariableError(PolynomialSyntaxError):
    pass


class UnsupportedRootLiteralError(PolynomialSyntaxError):
    pass
