"""Module containing sparse multivariate polynomials over exact coefficient domains"""
from fractions import Fraction
from math import lcm
from typing import Any, Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import DimensionMismatchError
from .monomial import Monomial, grevlex_key


def _monomial(exponents) -> Monomial:
    return tuple.__new__(Monomial, exponents)


def _is_zero(value: Any) -> bool:
    return not value


class MultiPoly:
    """
    Polynomial stored as a map from exponent vectors to nonzero coefficients.
    Iteration is in descending graded reverse lexicographic order; values are immutable
    """
    __slots__ = ('_variable_count', '_terms', '_hash')

    def __init__(self, variable_count: int, terms: Optional[Mapping[Sequence[int], Any]] = None):
        self._variable_count = variable_count
        self._terms: Dict[Monomial, Any] = {}
        self._hash = None

        for exponents, coefficient in (terms or {}).items():
            if len(exponents) != variable_count:
                raise DimensionMismatchError(
                    f'monomial {tuple(exponents)} does not have {variable_count} exponents')
            if not _is_zero(coefficient):
                key = Monomial(exponents)
                total = self._terms.get(key)
                total = coefficient if total is None else total + coefficient
                if _is_zero(total):
                    self._terms.pop(key, None)
                else:
                    self._terms[key] = total

    @classmethod
    def _from_clean_terms(cls, variable_count: int, terms: Dict[Monomial, Any]) -> 'MultiPoly':
        poly = cls.__new__(cls)
        poly._variable_count = variable_count
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, variable_count: int) -> 'MultiPoly':
        return cls._from_clean_terms(variable_count, {})

    @classmethod
    def constant(cls, variable_count: int, value: Any) -> 'MultiPoly':
        return cls(variable_count, {(0,) * variable_count: value})

    @classmethod
    def variable(cls, variable_count: int, index: int, coefficient: Any = 1) -> 'MultiPoly':
        exponents = [0] * variable_count
        exponents[index] = 1
        return cls(variable_count, {tuple(exponents): coefficient})

    @classmethod
    def linear_form(cls, coefficients: Sequence[Any]) -> 'MultiPoly':
        """sum_j coefficients[j] * x_j"""
        count = len(coefficients)
        terms = {}
        for j, c in enumerate(coefficients):
            if not _is_zero(c):
                exponents = [0] * count
                exponents[j] = 1
                terms[_monomial(exponents)] = c
        return cls._from_clean_terms(count, terms)

    @property
    def variable_count(self) -> int:
        return self._variable_count

    @property
    def terms(self) -> Dict[Monomial, Any]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Any]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> List[Tuple[Monomial, Any]]:
        return sorted(self._terms.items(), key=lambda item: grevlex_key(item[0]), reverse=True)

    def support(self) -> List[Monomial]:
        return [m for m, _ in self.sorted_terms()]

    def coefficient(self, monomial: Sequence[int]) -> Any:
        return self._terms.get(tuple(monomial), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        degrees = {sum(m) for m in self._terms}
        if degree is not None:
            return degrees <= {degree}
        return len(degrees) <= 1

    def leading_term(self) -> Tuple[Monomial, Any]:
        if not self._terms:
            raise ValueError('the zero polynomial has no leading term')
        return self.sorted_terms()[0]

    def coefficient_order(self) -> int:
        """Smallest n with every coefficient in Q(zeta_n)"""
        order = 1
        for c in self._terms.values():
            order = lcm(order, getattr(c, 'order', 1))
        return order

    def map_coefficients(self, function: Callable[[Any], Any]) -> 'MultiPoly':
        return MultiPoly(self._variable_count, {m: function(c) for m, c in self._terms.items()})

    def _check_compatible(self, other: 'MultiPoly') -> None:
        if other._variable_count != self._variable_count:
            raise DimensionMismatchError(
                f'cannot combine polynomials in {self._variable_count} and {other._variable_count} variables')

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self._variable_count, other)
        self._check_compatible(other)

        terms = dict(self._terms)
        for m, c in other._terms.items():
            total = terms.get(m)
            total = c if total is None else total + c
            if _is_zero(total):
                terms.pop(m, None)
            else:
                terms[m] = total

        return MultiPoly._from_clean_terms(self._variable_count, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._from_clean_terms(self._variable_count, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self._variable_count, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor: Any) -> 'MultiPoly':
        if _is_zero(factor):
            return MultiPoly.zero(self._variable_count)
        terms = {}
        for m, c in self._terms.items():
            product = c * factor
            if not _is_zero(product):
                terms[m] = product
        return MultiPoly._from_clean_terms(self._variable_count, terms)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check_compatible(other)

        terms: Dict[Monomial, Any] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _monomial(a + b for a, b in zip(m1, m2))
                total = terms.get(m)
                product = c1 * c2
                terms[m] = product if total is None else total + product

        return MultiPoly._from_clean_terms(
            self._variable_count, {m: c for m, c in terms.items() if not _is_zero(c)})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented

        result = MultiPoly.constant(self._variable_count, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._variable_count == other._variable_count and self._terms == other._terms
        if not self._terms:
            return other == 0
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._variable_count, frozenset(self._terms.items())))
        return self._hash

    def is_proportional_to(self, other: 'MultiPoly') -> bool:
        """True iff self = c * other for a nonzero scalar c (both nonzero)"""
        if self.is_zero() or other.is_zero() or set(self._terms) != set(other._terms):
            return False
        monomial, coefficient = other.leading_term()
        ratio = self._terms[monomial] / coefficient
        return self == other.scale(ratio)

    def compose(self, images: Sequence['MultiPoly']) -> 'MultiPoly':
        """Substitutes x_i -> images[i]; the result lives in the images' variable count"""
        if len(images) != self._variable_count:
            raise DimensionMismatchError(
                f'{len(images)} images given for {self._variable_count} variables')

        target_count = images[0].variable_count if images else 0
        power_cache: Dict[Tuple[int, int], MultiPoly] = {}

        def power(index: int, exponent: int) -> MultiPoly:
            key = (index, exponent)
            if key not in power_cache:
                power_cache[key] = images[index] ** exponent
            return power_cache[key]

        result = MultiPoly.zero(target_count)
        for m, c in self._terms.items():
            term = MultiPoly.constant(target_count, c)
            for index, exponent in enumerate(m):
                if exponent:
                    term = term * power(index, exponent)
                    if term.is_zero():
                        break
            result = result + term

        return result

    def partial_derivative(self, index: int) -> 'MultiPoly':
        terms = {}
        for m, c in self._terms.items():
            e = m[index]
            if e:
                exponents = list(m)
                exponents[index] = e - 1
                terms[_monomial(exponents)] = c * e
        return MultiPoly._from_clean_terms(
            self._variable_count, {m: c for m, c in terms.items() if not _is_zero(c)})

    def evaluate(self, point: Sequence[Any]) -> Any:
        if len(point) != self._variable_count:
            raise DimensionMismatchError(
                f'point has {len(point)} coordinates, polynomial has {self._variable_count} variables')

        total = 0
        for m, c in self._terms.items():
            value = c
            for x, e in zip(point, m):
                if e:
                    value = value * x ** e
            total = total + value
        return total

    def to_expression(self, names: Sequence[str]) -> str:
        from .parser import format_poly
        return format_poly(self, names)

    def __repr__(self):
        names = [f'x{i}' for i in range(self._variable_count)]
        return f'MultiPoly({self.to_expression(names)})'


def as_coefficient(value: Any) -> Any:
    """Normalizes plain ints to Fractions so division stays exact"""
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


def substitute_linear(poly: MultiPoly, matrix: Sequence[Sequence[Any]]) -> MultiPoly:
    """
    F(M.x): the variable x_i is replaced by sum_j M[i][j] x_j.
    With this convention substitute_linear(F, M1 M2) = substitute_linear(substitute_linear(F, M1), M2)
    """
    size = poly.variable_count
    if len(matrix) != size or any(len(row) != size for row in matrix):
        raise DimensionMismatchError(f'matrix must be {size}x{size}')

    return poly.compose([MultiPoly.linear_form(row) for row in matrix])


def partial_derivatives(poly: MultiPoly) -> List[MultiPoly]:
    """One partial derivative per variable"""
    return [poly.partial_derivative(i) for i in range(poly.variable_count)]


def evaluate(poly: MultiPoly, point: Sequence[Any]) -> Any:
    """Exact value of the polynomial at the point"""
    return poly.evaluate(point)
