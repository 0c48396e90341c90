"""Module containing exact arithmetic in cyclotomic fields Q(zeta_n)"""
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Optional, Tuple, Union

from sympy import Poly, Symbol, cyclotomic_poly, factorint, legendre_symbol, totient

from .errors import ExactArithmeticError, IncompatibleOrderError
from .rational import as_rational, format_rational
from ..utils.linalg import solve

# largest field degree a promotion may reach; Q(zeta_60) has degree 16
MAX_FIELD_DEGREE = 48

Coefficient = Union[int, Fraction]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _mobius(n: int) -> int:
    factors = factorint(n)
    if any(exponent > 1 for exponent in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def _tidy(value: Coefficient) -> Coefficient:
    """Stores integral coefficients as ints, which keeps inner loops fast"""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


class _CyclotomicContext:
    """Reduction data for one cyclotomic field"""
    __slots__ = ('order', 'degree', 'powers', 'power_index', 'normalized_traces')

    def __init__(self, order: int):
        x = Symbol('x')
        # coefficients of Phi_n from the constant term upwards; leading one last
        phi_coefficients = [int(c) for c in reversed(Poly(cyclotomic_poly(order, x), x).all_coeffs())]
        degree = len(phi_coefficients) - 1

        powers = []
        current = [0] * degree
        current[0] = 1
        for _ in range(max(order, 2 * degree - 1)):
            powers.append(tuple(current))
            top = current[-1]
            shifted = [0] + current[:-1]
            if top:
                shifted = [s - top * c for s, c in zip(shifted, phi_coefficients[:-1])]
            current = shifted

        self.order = order
        self.degree = degree
        self.powers = powers
        self.power_index: Dict[Tuple[int, ...], int] = {powers[k]: k for k in range(order)}
        self.normalized_traces = []
        for k in range(degree):
            d = order // gcd(order, k)
            self.normalized_traces.append(Fraction(_mobius(d), int(totient(d))))


@lru_cache(maxsize=None)
def _context(order: int) -> _CyclotomicContext:
    if order < 1:
        raise ExactArithmeticError(f'cyclotomic order must be positive, got {order}')
    return _CyclotomicContext(order)


def field_degree(order: int) -> int:
    """Degree phi(n) of Q(zeta_n) over Q"""
    return _context(order).degree


def common_order(first: int, second: int) -> int:
    """Smallest order into which both fields embed, subject to the degree ceiling"""
    order = _lcm(first, second)
    if int(totient(order)) > MAX_FIELD_DEGREE:
        raise IncompatibleOrderError(
            f'Q(zeta_{first}) and Q(zeta_{second}) only meet in Q(zeta_{order}), '
            f'whose degree exceeds {MAX_FIELD_DEGREE}')
    return order


def _multiply(context: _CyclotomicContext, left: Tuple, right: Tuple) -> Tuple:
    degree = context.degree
    convolution = [0] * (2 * degree - 1)

    for i, a in enumerate(left):
        if a:
            for j, b in enumerate(right):
                if b:
                    convolution[i + j] += a * b

    result = convolution[:degree]
    powers = context.powers
    for k in range(degree, 2 * degree - 1):
        c = convolution[k]
        if c:
            row = powers[k]
            for i in range(degree):
                if row[i]:
                    result[i] += c * row[i]

    return tuple(_tidy(v) for v in result)


@lru_cache(maxsize=8192)
def _inverse_coefficients(order: int, coefficients: Tuple) -> Tuple:
    context = _context(order)
    degree = context.degree
    columns = []
    for j in range(degree):
        columns.append(_multiply(context, coefficients, context.powers[j]))

    matrix = [[Fraction(columns[j][i]) for j in range(degree)] for i in range(degree)]
    rhs = [Fraction(1)] + [Fraction(0)] * (degree - 1)
    solution = solve(matrix, rhs)

    if solution is None:
        raise ExactArithmeticError('inversion of zero')

    return tuple(_tidy(v) for v in solution)


class CyclotomicNumber:
    """
    An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1), reduced modulo Phi_n.
    Values are immutable and compare equal across orders through the common embedding
    """
    __slots__ = ('_order', '_coeffs', '_hash')

    def __init__(self, order: int, coeffs):
        context = _context(order)
        coeffs = tuple(_tidy(as_rational(c)) if not isinstance(c, int) else c for c in coeffs)

        if len(coeffs) != context.degree:
            raise ExactArithmeticError(
                f'Q(zeta_{order}) needs {context.degree} coefficients, got {len(coeffs)}')

        self._order = order
        self._coeffs = coeffs
        self._hash = None

    @classmethod
    def _raw(cls, order: int, coeffs: Tuple) -> 'CyclotomicNumber':
        value = cls.__new__(cls)
        value._order = order
        value._coeffs = coeffs
        value._hash = None
        return value

    @classmethod
    def from_rational(cls, value, order: int = 1) -> 'CyclotomicNumber':
        """The constant `value` viewed in Q(zeta_order)"""
        degree = _context(order).degree
        return cls._raw(order, (_tidy(as_rational(value)),) + (0,) * (degree - 1))

    @classmethod
    def zeta(cls, order: int, exponent: int = 1) -> 'CyclotomicNumber':
        """zeta_order ** exponent"""
        context = _context(order)
        return cls._raw(order, context.powers[exponent % order])

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in self._coeffs)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ExactArithmeticError(f'{self.to_expression()} is not rational')
        return Fraction(self._coeffs[0])

    def normalized_trace(self) -> Fraction:
        """Trace over Q divided by the field degree; unchanged by embeddings"""
        traces = _context(self._order).normalized_traces
        return sum((traces[i] * c for i, c in enumerate(self._coeffs) if c), Fraction(0))

    def embed(self, order: int) -> 'CyclotomicNumber':
        """Image under zeta_n -> zeta_m^(m/n)"""
        if order == self._order:
            return self
        if order % self._order:
            raise IncompatibleOrderError(f'order {self._order} does not divide {order}')

        target = _context(order)
        step = order // self._order
        result = [0] * target.degree
        for i, c in enumerate(self._coeffs):
            if c:
                row = target.powers[(i * step) % order]
                for j, r in enumerate(row):
                    if r:
                        result[j] += c * r

        return CyclotomicNumber._raw(order, tuple(_tidy(v) for v in result))

    def inverse(self) -> 'CyclotomicNumber':
        if self.is_zero():
            raise ExactArithmeticError('inversion of zero')

        if self.is_rational():
            return CyclotomicNumber.from_rational(1 / Fraction(self._coeffs[0]), self._order)

        return CyclotomicNumber._raw(self._order, _inverse_coefficients(self._order, self._coeffs))

    def discrete_log(self, order: int) -> Optional[int]:
        """k with self == zeta_order^k, or None when self is not an order-th root of unity"""
        common = _lcm(self._order, order)
        embedded = self.embed(common)
        exponent = _context(common).power_index.get(embedded._coeffs)
        step = common // order

        if exponent is None or exponent % step:
            return None

        return exponent // step

    def _coerce(self, other) -> Optional[Tuple['CyclotomicNumber', 'CyclotomicNumber']]:
        if isinstance(other, CyclotomicNumber):
            if other._order == self._order:
                return self, other
            order = common_order(self._order, other._order)
            return self.embed(order), other.embed(order)

        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self, CyclotomicNumber.from_rational(other, self._order)

        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicNumber._raw(a._order, tuple(_tidy(x + y) for x, y in zip(a._coeffs, b._coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self._order, tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicNumber._raw(a._order, tuple(_tidy(x - y) for x, y in zip(a._coeffs, b._coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return CyclotomicNumber._raw(self._order, (0,) * len(self._coeffs))
            return CyclotomicNumber._raw(self._order, tuple(_tidy(c * other) for c in self._coeffs))

        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.is_rational():
            return b * Fraction(a._coeffs[0])
        if b.is_rational():
            return a * Fraction(b._coeffs[0])
        return CyclotomicNumber._raw(a._order, _multiply(_context(a._order), a._coeffs, b._coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ExactArithmeticError('division by zero')
            return self * (1 / Fraction(other))

        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented

        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = CyclotomicNumber.from_rational(1, self._order)

        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base

        return result

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber) and other._order == self._order:
            return self._coeffs == other._coeffs

        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational() and self._coeffs[0] == other

        if isinstance(other, CyclotomicNumber):
            a, b = self._coerce(other)
            return a._coeffs == b._coeffs

        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.normalized_trace())
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def to_expression(self) -> str:
        """Text form accepted by the polynomial parser, e.g. (1 + 2*zeta(12)^3)"""
        if self.is_rational():
            return format_rational(Fraction(self._coeffs[0]))

        parts = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            c = Fraction(c)
            power = '' if k == 0 else (f'zeta({self._order})' if k == 1 else f'zeta({self._order})^{k}')
            magnitude = format_rational(abs(c))

            if not power:
                text = magnitude
            elif magnitude == '1':
                text = power
            else:
                text = f'{magnitude}*{power}'

            if not parts:
                parts.append(text if c > 0 else f'-{text}')
            else:
                parts.append(f'+ {text}' if c > 0 else f'- {text}')

        return '(' + ' '.join(parts) + ')'

    def __str__(self):
        return self.to_expression()

    def __repr__(self):
        return f'CyclotomicNumber({self.to_expression()}, order={self._order})'


def root_of_unity(order: int, exponent: int = 1) -> CyclotomicNumber:
    """zeta_order ** exponent"""
    return CyclotomicNumber.zeta(order, exponent)


def cyc_embed(value: CyclotomicNumber, order: int) -> CyclotomicNumber:
    """Embeds Q(zeta_n) into Q(zeta_m) for n | m"""
    return value.embed(order)


def cyc_arith(a: CyclotomicNumber, b: Optional[CyclotomicNumber], op: str):
    """Dispatches one of add, mul, inv, neg, eq"""
    if op == 'add':
        return a + b
    if op == 'mul':
        return a * b
    if op == 'inv':
        return a.inverse()
    if op == 'neg':
        return -a
    if op == 'eq':
        return a == b
    raise ValueError(f'unknown cyclotomic operation {op}')


@lru_cache(maxsize=None)
def _sqrt_of_prime(p: int) -> CyclotomicNumber:
    if p == 2:
        return root_of_unity(8, 1) + root_of_unity(8, 7)

    # quadratic Gauss sum: square root of p when p = 1 mod 4, i * sqrt(p) when p = 3 mod 4
    gauss_sum = CyclotomicNumber.from_rational(0, p)
    for a in range(1, p):
        gauss_sum = gauss_sum + root_of_unity(p, a) * int(legendre_symbol(a, p))

    if p % 4 == 1:
        return gauss_sum

    return -root_of_unity(4) * gauss_sum


def sqrt_model(k: int) -> CyclotomicNumber:
    """The square root of the integer k inside a cyclotomic field; positive real root for k > 0, i*sqrt(|k|) for k < 0"""
    if k == 0:
        return CyclotomicNumber.from_rational(0)

    outside = 1
    value = CyclotomicNumber.from_rational(1)
    for p, exponent in sorted(factorint(abs(k)).items()):
        outside *= p ** (exponent // 2)
        if exponent % 2:
            value = value * _sqrt_of_prime(p)

    if k < 0:
        value = value * root_of_unity(4)

    return value * outside
