"""Module containing the errors raised by exact arithmetic"""
from ..utils.errors import CubicfoldError


class ExactArithmeticError(CubicfoldError, ArithmeticError):
    """Raised on invalid exact field operations such as inverting zero"""
    pass


class IncompatibleOrderError(ExactArithmeticError):
    """Raised when two cyclotomic values have no common embedding within the allowed ceiling"""
    pass


class SpecializationError(ExactArithmeticError):
    """Raised when a value cannot be sent to the chosen prime field"""
    pass
