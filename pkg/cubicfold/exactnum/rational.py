"""Module containing helpers for arbitrary-precision rationals"""
from fractions import Fraction
from typing import Union

Rational = Fraction

RationalLike = Union[int, str, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """Converts ints, 'p/q' strings and Fractions to a reduced Fraction"""
    if isinstance(value, bool):
        raise TypeError('booleans are not rationals')

    if isinstance(value, Fraction):
        return value

    if isinstance(value, (int, str)):
        return Fraction(value)

    raise TypeError(f'cannot convert {type(value).__name__} to a rational')


def format_rational(value: Fraction) -> str:
    """Formats as 'p' or 'p/q'"""
    if value.denominator == 1:
        return str(value.numerator)

    return f'{value.numerator}/{value.denominator}'
