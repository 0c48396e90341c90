"""Module containing elements of prime fields F_p"""
from fractions import Fraction

from sympy import isprime

from .errors import ExactArithmeticError


class PrimeFieldElement:
    """An element of F_p stored as its representative in [0, p)"""
    __slots__ = ('modulus', 'value')

    def __init__(self, value, modulus: int):
        if not isprime(modulus):
            raise ExactArithmeticError(f'{modulus} is not prime')

        if isinstance(value, Fraction):
            if value.denominator % modulus == 0:
                raise ExactArithmeticError(f'denominator of {value} vanishes mod {modulus}')
            value = value.numerator * pow(value.denominator, -1, modulus)

        self.modulus = modulus
        self.value = int(value) % modulus

    def _lift(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ExactArithmeticError(f'cannot mix F_{self.modulus} and F_{other.modulus}')
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.modulus
        if isinstance(other, Fraction):
            if other.denominator % self.modulus == 0:
                raise ExactArithmeticError(f'denominator of {other} vanishes mod {self.modulus}')
            return other.numerator * pow(other.denominator, -1, self.modulus) % self.modulus
        return None

    def _new(self, value: int) -> 'PrimeFieldElement':
        element = PrimeFieldElement.__new__(PrimeFieldElement)
        element.modulus = self.modulus
        element.value = value % self.modulus
        return element

    def __add__(self, other):
        value = self._lift(other)
        return NotImplemented if value is None else self._new(self.value + value)

    __radd__ = __add__

    def __sub__(self, other):
        value = self._lift(other)
        return NotImplemented if value is None else self._new(self.value - value)

    def __rsub__(self, other):
        value = self._lift(other)
        return NotImplemented if value is None else self._new(value - self.value)

    def __mul__(self, other):
        value = self._lift(other)
        return NotImplemented if value is None else self._new(self.value * value)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def inverse(self) -> 'PrimeFieldElement':
        if self.value == 0:
            raise ExactArithmeticError('inversion of zero')
        return self._new(pow(self.value, -1, self.modulus))

    def __truediv__(self, other):
        value = self._lift(other)
        if value is None:
            return NotImplemented
        return self * self._new(value).inverse()

    def __rtruediv__(self, other):
        value = self._lift(other)
        if value is None:
            return NotImplemented
        return self._new(value) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return self._new(pow(self.value, exponent, self.modulus))

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.value == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f'PrimeFieldElement({self.value}, {self.modulus})'
