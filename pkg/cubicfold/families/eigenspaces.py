"""Module containing eigenspaces of automorphisms on cubic forms and on projective space"""
import logging
from collections import Counter
from fractions import Fraction
from math import isqrt, lcm
from typing import Any, List, Optional, Sequence, Tuple

from ..autgrp.automorphism import ProjectiveAutomorphism, order_in_pgl
from ..autgrp.semi_invariance import transform_form
from ..exactnum.cyclotomic import MAX_FIELD_DEGREE, CyclotomicNumber, field_degree, sqrt_model
from ..mpoly.monomial import Monomial, grevlex_key, monomials_of_degree
from ..mpoly.polynomial import MultiPoly
from ..utils import linalg
from .errors import EigenvalueOutsideFieldError, EmptyFamilyError


class InvariantCubicSpace:
    """
    Basis of the lambda-eigenspace of F -> F o M on forms of one degree. For monomial M every
    basis vector is supported on a single orbit of monomials; for diagonal M it is a monomial
    """

    def __init__(self, basis: Sequence[MultiPoly], variable_count: int):
        self.basis = list(basis)
        self.variable_count = variable_count

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    @property
    def monomials(self) -> List[Monomial]:
        """Union of the supports, in descending grevlex order"""
        seen = {}
        for vector in self.basis:
            for monomial in vector.support():
                seen[monomial] = None
        return sorted(seen, key=grevlex_key, reverse=True)

    def is_monomial(self) -> bool:
        return all(len(vector) == 1 for vector in self.basis)

    def contains(self, form: MultiPoly) -> bool:
        """True iff form lies in the span of the basis"""
        if form.is_zero():
            return True
        monomials = self.monomials
        if not set(form.terms) <= set(monomials) or not self.basis:
            return False
        columns = [[_field(vector.coefficient(m)) for m in monomials] for vector in self.basis]
        target = [_field(form.coefficient(m)) for m in monomials]
        return linalg.solve(linalg.transpose(columns), target) is not None

    def generic_member(self, coefficients: Sequence[Any]) -> MultiPoly:
        member = MultiPoly.zero(self.variable_count)
        for vector, coefficient in zip(self.basis, coefficients):
            member = member + vector.scale(coefficient)
        return member


def _field(value: Any) -> Any:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


def _monomial_orbit_basis(automorphism: ProjectiveAutomorphism, scalar: Any,
                          monomials: Sequence[Monomial]) -> List[MultiPoly]:
    """Eigenvectors of a monomial action, one per orbit whose cycle product equals lambda^L"""
    permutation, order, weights = automorphism.structure
    count = automorphism.size
    visited = set()
    basis = []

    for start in monomials:
        if start in visited:
            continue

        orbit = []
        exponents = []
        current = start
        while current not in visited:
            visited.add(current)
            orbit.append(current)
            exponents.append(sum(e * weights[permutation[i]] for i, e in enumerate(current)) % order)
            current = current.permuted(permutation)

        if CyclotomicNumber.zeta(order, sum(exponents)) != scalar ** len(orbit):
            continue

        # coefficient of orbit[j + 1] is coefficient of orbit[j] times zeta^k_j / lambda
        terms = {}
        coefficient: Any = Fraction(1)
        for j, monomial in enumerate(orbit):
            terms[monomial] = coefficient
            coefficient = coefficient * CyclotomicNumber.zeta(order, exponents[j]) / scalar
        basis.append(MultiPoly(count, terms))

    return basis


def invariant_cubic_space(automorphism: ProjectiveAutomorphism, scalar: Any = 1, degree: int = 3) -> InvariantCubicSpace:
    """Basis of {F : F o M = lambda F} among forms of the given degree"""
    count = automorphism.size
    monomials = monomials_of_degree(degree, count)
    scalar = _field(scalar)

    if automorphism.is_monomial():
        return InvariantCubicSpace(_monomial_orbit_basis(automorphism, scalar, monomials), count)

    index = {m: k for k, m in enumerate(monomials)}
    size = len(monomials)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for column, monomial in enumerate(monomials):
        image = transform_form(MultiPoly(count, {monomial: Fraction(1)}), automorphism)
        for target, coefficient in image.terms.items():
            matrix[index[target]][column] = _field(coefficient)
    for k in range(size):
        matrix[k][k] = matrix[k][k] - scalar

    basis = []
    for vector in linalg.nullspace(matrix):
        basis.append(MultiPoly(count, {m: c for m, c in zip(monomials, vector)}))
    return InvariantCubicSpace(basis, count)


def centralizer_dimension(automorphism: ProjectiveAutomorphism) -> int:
    """sum of squared eigenvalue multiplicities minus one"""
    structure = automorphism.structure
    if structure is not None and structure.is_diagonal:
        return sum(m * m for m in Counter(structure.weights).values()) - 1

    size = automorphism.size
    matrix = [[_field(e) for e in row] for row in automorphism.matrix]
    # unknown X[a][b] sits at column a * size + b; rows are the entries of X.M - M.X
    equations = []
    for i in range(size):
        for j in range(size):
            row = [Fraction(0)] * (size * size)
            for k in range(size):
                row[i * size + k] = row[i * size + k] + matrix[k][j]
                row[k * size + j] = row[k * size + j] - matrix[i][k]
            equations.append(row)
    return size * size - linalg.rank(equations) - 1


def family_dimension(automorphism: ProjectiveAutomorphism, scalar: Any = 1) -> int:
    """(dim of the invariant cubic space - 1) - centralizer dimension"""
    space = invariant_cubic_space(automorphism, scalar)
    if not space.dimension:
        raise EmptyFamilyError(f'no cubic form is semi-invariant under {automorphism!r} with scalar {scalar}')
    return (space.dimension - 1) - centralizer_dimension(automorphism)


def _integer_root(value: int, exponent: int) -> Optional[int]:
    root = round(abs(value) ** (1.0 / exponent))
    for candidate in (root - 1, root, root + 1):
        if candidate >= 0 and candidate ** exponent == abs(value):
            return candidate
    return None


def _normalizing_scalar(power: Any, exponent: int) -> Optional[Any]:
    """r with power / r^exponent a root of unity, tried among rationals and square roots of integers"""
    if isinstance(power, CyclotomicNumber):
        if not power.is_rational():
            return Fraction(1)
        power = power.to_rational()

    power = abs(Fraction(power))
    numerator = _integer_root(power.numerator, exponent)
    denominator = _integer_root(power.denominator, exponent)
    if numerator is not None and denominator is not None:
        return Fraction(numerator, denominator)

    if exponent % 2 == 0:
        numerator = _integer_root(power.numerator, exponent // 2)
        denominator = _integer_root(power.denominator, exponent // 2)
        if numerator is not None and denominator is not None and isqrt(denominator) ** 2 == denominator:
            return sqrt_model(numerator) / isqrt(denominator)
    return None


def fixed_locus_p5(automorphism: ProjectiveAutomorphism) -> List[Tuple[Any, List[List[Any]]]]:
    """
    Eigen-decomposition (eigenvalue, eigenspace basis). The fixed locus of M on projective
    space is the disjoint union of the projectivized eigenspaces
    """
    size = automorphism.size
    structure = automorphism.structure

    if structure is not None and structure.is_diagonal:
        components = []
        for weight in sorted(set(structure.weights)):
            basis = [[Fraction(int(i == j)) for j in range(size)]
                     for i in range(size) if structure.weights[i] == weight]
            components.append((CyclotomicNumber.zeta(structure.order, weight), basis))
        return components

    order = order_in_pgl(automorphism)
    power = automorphism ** order
    scalar_power = _field(power.matrix[0][0])

    normalizer = _normalizing_scalar(scalar_power, order)
    if normalizer is None:
        raise EigenvalueOutsideFieldError(f'no normalization of {automorphism!r} with roots of unity as eigenvalues')
    unit = scalar_power / normalizer ** order

    unit_order = None
    for candidate in range(1, 2 * MAX_FIELD_DEGREE + 1):
        if _field(unit) ** candidate == 1:
            unit_order = candidate
            break
    if unit_order is None:
        raise EigenvalueOutsideFieldError(f'M^{order} is not a root of unity times a supported scalar')

    field_order = lcm(automorphism.field_order, getattr(normalizer, 'order', 1), order * unit_order)
    if field_degree(field_order) > MAX_FIELD_DEGREE:
        raise EigenvalueOutsideFieldError(f'eigenvalues of {automorphism!r} need Q(zeta_{field_order})')

    matrix = [[_field(e) for e in row] for row in automorphism.matrix]
    components = []
    found = 0
    for exponent in range(field_order):
        candidate = CyclotomicNumber.zeta(field_order, exponent)
        if candidate ** order != unit:
            continue
        eigenvalue = candidate * normalizer
        shifted = [[entry - eigenvalue if i == j else entry for j, entry in enumerate(row)]
                   for i, row in enumerate(matrix)]
        basis = linalg.nullspace(shifted)
        if basis:
            components.append((eigenvalue, basis))
            found += len(basis)

    if found != size:
        raise EigenvalueOutsideFieldError(f'{automorphism!r} is not diagonalizable over Q(zeta_{field_order})')

    logging.info(f'eigenspace dimensions {[len(b) for _, b in components]} over Q(zeta_{field_order})')
    return components


def eigenvalue_multiplicities(automorphism: ProjectiveAutomorphism) -> Tuple[int, ...]:
    """Sorted eigenspace dimensions, a conjugacy invariant up to scalars"""
    return tuple(sorted((len(basis) for _, basis in fixed_locus_p5(automorphism)), reverse=True))
