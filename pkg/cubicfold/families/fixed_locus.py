"""Module containing fixed loci of an automorphism on a cubic fourfold"""
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional

from pydantic import BaseModel
from sympy import I, QQ, Poly, Symbol, cyclotomic_poly, exp, pi

from ..autgrp.automorphism import ProjectiveAutomorphism
from ..autgrp.errors import NotSemiInvariantError
from ..autgrp.semi_invariance import semi_invariance
from ..exactnum.cyclotomic import CyclotomicNumber, common_order, field_degree
from ..mpoly.polynomial import MultiPoly
from ..utils import linalg
from .cubic import CubicFourfold
from .eigenspaces import fixed_locus_p5

_KIND_BY_DIMENSION = {2: 'curve', 3: 'surface'}


class FixedLocusComponent(BaseModel):
    """One projectivized eigenspace intersected with X"""
    eigenvalue: Any
    basis: List[List[Any]]
    kind: str
    point_count: int = 0
    points: List[List[Any]] = []
    equation: Optional[MultiPoly] = None
    note: str = ''

    class Config:
        arbitrary_types_allowed = True

    @property
    def projective_dimension(self) -> int:
        return len(self.basis) - 1

    def summary(self) -> Dict[str, Any]:
        summary = {'eigenvalue': str(self.eigenvalue), 'projective_dimension': self.projective_dimension,
                   'kind': self.kind}
        if self.kind == 'points':
            summary['point_count'] = self.point_count
        if self.equation is not None:
            summary['equation'] = self.equation.to_expression([f't{i}' for i in range(len(self.basis))])
        if self.note:
            summary['note'] = self.note
        return summary


class FixedLocusReport(BaseModel):
    components: List[FixedLocusComponent]

    class Config:
        arbitrary_types_allowed = True

    def isolated_point_count(self) -> int:
        return sum(c.point_count for c in self.components if c.kind == 'points')

    def components_of_kind(self, kind: str) -> List[FixedLocusComponent]:
        return [c for c in self.components if c.kind == kind]

    def is_finite(self) -> bool:
        return all(c.kind in ('points', 'empty') for c in self.components)

    def shape(self) -> Dict[str, int]:
        """Counts of isolated points and of positive-dimensional components"""
        return {
            'isolated_points': self.isolated_point_count(),
            'curves': len(self.components_of_kind('curve')),
            'surfaces': len(self.components_of_kind('surface')),
            'hypersurfaces': len(self.components_of_kind('hypersurface')),
            'contained_subspaces': len(self.components_of_kind('subspace')),
        }

    def verify_points(self, form: MultiPoly, automorphism: ProjectiveAutomorphism) -> bool:
        """Every explicit point satisfies F(P) = 0 and M.P ~ P"""
        for component in self.components:
            for point in component.points:
                if form.evaluate(point) != 0:
                    return False
                if linalg.rank([list(point), automorphism.apply(point)]) != 1:
                    return False
        return True


def restrict_to_span(form: MultiPoly, basis: List[List[Any]]) -> MultiPoly:
    """F(sum_j t_j b_j) in fresh variables t_j"""
    count = len(basis)
    images = [MultiPoly.linear_form([vector[i] for vector in basis]) if any(v[i] != 0 for v in basis)
              else MultiPoly.zero(count) for i in range(form.variable_count)]
    return form.compose(images)


def binary_cubic_root_count(restricted: MultiPoly) -> int:
    """Distinct zeros on P^1 of a nonzero binary cubic, from its discriminant and Hessian"""
    a = restricted.coefficient((3, 0))
    b = restricted.coefficient((2, 1))
    c = restricted.coefficient((1, 2))
    d = restricted.coefficient((0, 3))

    discriminant = b * b * c * c - 4 * a * c ** 3 - 4 * b ** 3 * d - 27 * a * a * d * d + 18 * a * b * c * d
    if discriminant != 0:
        return 3

    hessian = (b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d)
    return 1 if all(h == 0 for h in hessian) else 2


def _working_order(values: List[Any], order: int) -> int:
    for value in values:
        if isinstance(value, CyclotomicNumber):
            order = common_order(order, value.order)
    return order


@lru_cache(maxsize=None)
def _number_field(order: int):
    """QQ when Q(zeta_order) = Q, otherwise QQ<zeta_order> with generator exp(2 pi i / order)"""
    if field_degree(order) == 1:
        return QQ
    z = Symbol('z')
    return QQ.algebraic_field((Poly(cyclotomic_poly(order, z), z), exp(2 * pi * I / order)))


def _to_field(value: Any, order: int, field) -> Any:
    if field == QQ:
        rational = value.to_rational() if isinstance(value, CyclotomicNumber) else Fraction(value)
        return QQ(rational.numerator, rational.denominator)
    if not isinstance(value, CyclotomicNumber):
        value = CyclotomicNumber.from_rational(value, order)
    coeffs = [Fraction(c) for c in value.embed(order).coeffs]
    return field.new([QQ(c.numerator, c.denominator) for c in reversed(coeffs)])


def _from_field(element: Any, order: int, field) -> Any:
    if field == QQ:
        return Fraction(int(element.numerator), int(element.denominator))
    descending = [Fraction(int(c.numerator), int(c.denominator)) for c in element.to_list()]
    ascending = list(reversed(descending)) + [Fraction(0)] * (field_degree(order) - len(descending))
    return CyclotomicNumber(order, ascending)


def binary_cubic_points(restricted: MultiPoly, basis: List[List[Any]], order: int = 1) -> List[List[Any]]:
    """
    Zeros of the binary cubic with coordinates in Q(zeta_n), n a multiple of `order` covering
    every coefficient. Linear factors over the number field give the affine roots r, i.e. the
    points r*b_0 + b_1, and a vanishing t0^3 coefficient adds b_0
    """
    monomials = ((3, 0), (2, 1), (1, 2), (0, 3))
    coefficients = [restricted.coefficient(m) for m in monomials]
    order = _working_order(coefficients, order)
    field = _number_field(order)

    first, second = basis
    points = []
    if coefficients[0] == 0:
        points.append(list(first))

    polynomial = Poly.from_list([_to_field(c, order, field) for c in coefficients], Symbol('r'), domain=field)
    if polynomial.is_zero or polynomial.degree() < 1:
        return points

    _, factors = polynomial.factor_list()
    for factor, _ in factors:
        if factor.degree() != 1:
            continue
        leading, constant = factor.rep.to_list()
        value = _from_field(field.quo(field.neg(constant), leading), order, field)
        points.append([value * u + v for u, v in zip(first, second)])
    return points


def fixed_locus_on_x(cubic: CubicFourfold, automorphism: ProjectiveAutomorphism) -> FixedLocusReport:
    """Intersects every projectivized eigenspace of M with X; points carry exact coordinates in Q(zeta_n) when they have them"""
    form = cubic.reduced_form
    if semi_invariance(form, automorphism) is None:
        raise NotSemiInvariantError(f'{cubic.name} is not semi-invariant under {automorphism!r}')

    components = []
    for eigenvalue, basis in fixed_locus_p5(automorphism):
        restricted = restrict_to_span(form, basis)
        size = len(basis)

        if restricted.is_zero():
            components.append(FixedLocusComponent(eigenvalue=eigenvalue, basis=basis, kind='subspace'))
        elif size == 1:
            components.append(FixedLocusComponent(eigenvalue=eigenvalue, basis=basis, kind='empty'))
        elif size == 2:
            count = binary_cubic_root_count(restricted)
            points = binary_cubic_points(restricted, basis, automorphism.field_order)
            note = ''
            if len(points) < count:
                note = 'some coordinates lie outside the cyclotomic field; counted over the algebraic closure'
            components.append(FixedLocusComponent(eigenvalue=eigenvalue, basis=basis, kind='points',
                                                  point_count=count, points=points, equation=restricted, note=note))
        else:
            kind = _KIND_BY_DIMENSION.get(size - 1, 'hypersurface')
            components.append(FixedLocusComponent(eigenvalue=eigenvalue, basis=basis, kind=kind, equation=restricted))

    # a one-dimensional eigenspace lies on X exactly when F vanishes there
    for component in components:
        if len(component.basis) == 1 and component.kind == 'subspace':
            component.kind = 'points'
            component.point_count = 1
            component.points = [list(component.basis[0])]

    return FixedLocusReport(components=components)
