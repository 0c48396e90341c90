"""Module containing the errors raised by the family and catalog layer"""
from ..utils.errors import CubicfoldError


class UnknownCatalogNameError(CubicfoldError, KeyError):
    """Raised for a name missing from the catalog"""

    def __init__(self, name: str, known=()):
        self.name = name
        super().__init__(f'unknown catalog name {name!r}; known names: {", ".join(known)}')

    def __str__(self):
        return self.args[0]


class EigenvalueOutsideFieldError(CubicfoldError, ArithmeticError):
    """Raised when an eigen-decomposition needs roots outside the supported cyclotomic fields"""
    pass


class EmptyFamilyError(CubicfoldError, ValueError):
    """Raised when the requested eigenspace of cubic forms is zero"""
    pass
