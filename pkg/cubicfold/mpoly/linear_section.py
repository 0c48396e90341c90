"""Module containing linear sections of projective space and restriction of forms to them"""
from fractions import Fraction
from typing import Any, List, Optional, Sequence

from ..utils import linalg
from .errors import DimensionMismatchError
from .polynomial import MultiPoly, as_coefficient


class LinearSection:
    """
    Common zero locus of independent linear forms in N+1 variables, with a kernel basis.
    When built with `eliminate`, basis vector k has a one in the k-th kept coordinate and zeros
    in the other kept coordinates, so reduced coordinates are read off the kept positions
    """

    def __init__(self, ambient_count: int, forms: Sequence[MultiPoly], basis: Sequence[Sequence[Any]],
                 kept_variables: Optional[Sequence[int]] = None):
        if any(form.variable_count != ambient_count or not form.is_homogeneous(1) for form in forms):
            raise DimensionMismatchError(f'section forms must be linear in {ambient_count} variables')
        if len(basis) != ambient_count - len(forms):
            raise DimensionMismatchError(
                f'basis has {len(basis)} vectors, expected {ambient_count - len(forms)}')

        self.ambient_count = ambient_count
        self.forms = list(forms)
        self.basis = [list(vector) for vector in basis]
        self.kept_variables = list(kept_variables) if kept_variables is not None else None

        if forms and linalg.rank(self.form_matrix()) != len(forms):
            raise DimensionMismatchError('section forms are not independent')
        for vector in self.basis:
            if not self.contains_point(vector):
                raise DimensionMismatchError(f'basis vector {vector} is not in the section')

    @classmethod
    def from_forms(cls, forms: Sequence[MultiPoly], eliminate: Sequence[int]) -> 'LinearSection':
        """Kernel basis solving form k for the variable eliminate[k]"""
        ambient_count = forms[0].variable_count
        if len(eliminate) != len(forms):
            raise DimensionMismatchError('one eliminated variable is needed per form')

        kept = [j for j in range(ambient_count) if j not in eliminate]
        matrix = [[as_coefficient(form.coefficient(_unit(ambient_count, j))) for j in range(ambient_count)]
                  for form in forms]
        square = [[row[j] for j in eliminate] for row in matrix]
        inverse = linalg.inverse_matrix(square)

        basis = []
        for free in kept:
            column = [row[free] for row in matrix]
            solved = linalg.mat_vec(inverse, column)
            vector = [Fraction(0)] * ambient_count
            vector[free] = Fraction(1)
            for k, variable in enumerate(eliminate):
                vector[variable] = -solved[k]
            basis.append(vector)

        return cls(ambient_count, forms, basis, kept_variables=kept)

    @property
    def dimension(self) -> int:
        """Number of reduced coordinates"""
        return len(self.basis)

    def form_matrix(self) -> List[List[Any]]:
        return [[as_coefficient(form.coefficient(_unit(self.ambient_count, j)))
                 for j in range(self.ambient_count)] for form in self.forms]

    def contains_point(self, point: Sequence[Any]) -> bool:
        return all(form.evaluate(point) == 0 for form in self.forms)

    def parametrize(self, parameters: Sequence[Any]) -> List[Any]:
        """Ambient point basis . t"""
        if len(parameters) != len(self.basis):
            raise DimensionMismatchError(f'{len(parameters)} parameters for a {len(self.basis)}-vector basis')
        point = [0] * self.ambient_count
        for t, vector in zip(parameters, self.basis):
            if t:
                point = [p + t * v for p, v in zip(point, vector)]
        return point

    def coordinates_of(self, point: Sequence[Any]) -> List[Any]:
        """Reduced coordinates of an ambient point lying in the section"""
        if not self.contains_point(point):
            raise DimensionMismatchError(f'{list(point)} is not in the section')
        if self.kept_variables is not None:
            return [point[j] for j in self.kept_variables]

        solution = linalg.solve(linalg.transpose(self.basis), list(point))
        if solution is None:
            raise DimensionMismatchError(f'{list(point)} is not in the span of the basis')
        return solution

    def induced_matrix(self, matrix: Sequence[Sequence[Any]]) -> List[List[Any]]:
        """
        Matrix A on reduced coordinates with M.B = B.A, for an ambient M preserving the section.
        If F o M = lambda F then the restricted form f satisfies f o A = lambda f
        """
        columns = [self.coordinates_of(linalg.mat_vec(matrix, vector)) for vector in self.basis]
        return linalg.transpose(columns)


def _unit(count: int, index: int) -> tuple:
    exponents = [0] * count
    exponents[index] = 1
    return tuple(exponents)


def restrict_to_linear_section(poly: MultiPoly, section: LinearSection) -> MultiPoly:
    """F(basis . t) as a polynomial in fresh variables t_0 .. t_{k-1}"""
    if poly.variable_count != section.ambient_count:
        raise DimensionMismatchError(
            f'polynomial has {poly.variable_count} variables, section ambient has {section.ambient_count}')

    count = section.dimension
    images = []
    for i in range(section.ambient_count):
        images.append(MultiPoly.linear_form([vector[i] for vector in section.basis])
                      if count else MultiPoly.zero(0))
    return poly.compose(images)
