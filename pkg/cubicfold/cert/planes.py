"""Module containing planes in projective space, containment tests and the pattern-plane search"""
import logging
from fractions import Fraction
from itertools import combinations
from typing import Any, Iterator, List, Optional, Sequence, Tuple

from ..exactnum.cyclotomic import CyclotomicNumber
from ..families.cubic import CubicFourfold
from ..families.fixed_locus import restrict_to_span
from ..utils import linalg
from ..utils.config import get_enumeration_budget
from ..utils.errors import ensure_within_budget
from .errors import DegeneratePlaneError

# a pattern form is ('pair', i, j, k) for x_i + zeta_n^k x_j or ('zero', i) for x_i
PatternForm = Tuple


def _field(value: Any) -> Any:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


class PlaneInP5:
    """
    Plane spanned by three independent coordinate vectors. Equality and hashing go through the
    reduced echelon form, so the choice of basis does not matter
    """

    def __init__(self, basis: Sequence[Sequence[Any]], label: Optional[str] = None):
        self.basis = [[_field(e) for e in vector] for vector in basis]
        self.label = label
        if len(self.basis) != 3 or len({len(v) for v in self.basis}) != 1:
            raise DegeneratePlaneError('a plane needs three vectors of equal length')

        echelon, pivots = linalg.row_echelon(self.basis)
        if len(pivots) != 3:
            raise DegeneratePlaneError(f'basis {self.basis} has rank {len(pivots)}')
        self._key = tuple(tuple(row) for row in echelon[:3])

    @property
    def ambient_count(self) -> int:
        return len(self.basis[0])

    def canonical_key(self) -> Tuple:
        return self._key

    def __eq__(self, other):
        if not isinstance(other, PlaneInP5):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        name = f'{self.label}: ' if self.label else ''
        return f'PlaneInP5({name}{[[str(e) for e in row] for row in self._key]})'


def contains_plane(cubic: CubicFourfold, plane: PlaneInP5) -> bool:
    """
    True iff the cubic form vanishes identically on the plane. Planes given in ambient
    coordinates must also lie in the linear section
    """
    if cubic.section is not None and plane.ambient_count == cubic.ambient_count:
        if not all(cubic.section.contains_point(vector) for vector in plane.basis):
            return False
        form = cubic.form
    elif plane.ambient_count == cubic.variable_count:
        form = cubic.reduced_form
    else:
        raise DegeneratePlaneError(f'plane has {plane.ambient_count} coordinates, '
                                   f'{cubic.name} has {cubic.variable_count}')
    return restrict_to_span(form, plane.basis).is_zero()


def planes_disjoint(first: PlaneInP5, second: PlaneInP5) -> bool:
    """True iff the stacked bases have full rank 6, i.e. the planes share no projective point"""
    return linalg.rank(first.basis + second.basis) == 6


def _pattern_shapes(variables: Sequence[int], forms_needed: int) -> Iterator[List[PatternForm]]:
    """Sets of forms with pairwise disjoint supports: pairs (i, j) with i < j, singles x_i"""
    if forms_needed == 0:
        yield []
        return
    if len(variables) < 1:
        return

    first, rest = variables[0], variables[1:]
    # first variable left free
    if len(rest) >= forms_needed:
        yield from _pattern_shapes(rest, forms_needed)
    # first variable set to zero
    for shape in _pattern_shapes(rest, forms_needed - 1):
        yield [('zero', first)] + shape
    # first variable paired with a later one
    for partner in rest:
        remaining = [v for v in rest if v != partner]
        for shape in _pattern_shapes(remaining, forms_needed - 1):
            yield [('pair', first, partner)] + shape


def _root(n: int, k: int) -> Any:
    if n <= 2:
        return Fraction((-1) ** k)
    return CyclotomicNumber.zeta(n, k)


def pattern_plane(forms: Sequence[PatternForm], count: int, n: int) -> PlaneInP5:
    """Kernel basis: one vector per free variable and per pair x_i = -zeta^k x_j"""
    zero = Fraction(0) if n <= 2 else CyclotomicNumber.from_rational(0, n)
    one = Fraction(1) if n <= 2 else CyclotomicNumber.from_rational(1, n)
    used = set()
    basis = []
    for form in forms:
        if form[0] == 'zero':
            used.add(form[1])
        else:
            _, i, j, k = form
            used.update((i, j))
            vector = [zero] * count
            vector[j] = one
            vector[i] = -_root(n, k)
            basis.append(vector)
    for free in range(count):
        if free not in used:
            vector = [zero] * count
            vector[free] = one
            basis.append(vector)
    return PlaneInP5(basis, label=describe_pattern(forms, n))


def describe_pattern(forms: Sequence[PatternForm], n: int) -> str:
    pieces = []
    for form in forms:
        if form[0] == 'zero':
            pieces.append(f'x{form[1]}')
        elif form[3] == 0:
            pieces.append(f'x{form[1]} + x{form[2]}')
        else:
            pieces.append(f'x{form[1]} + zeta({n})^{form[3]}*x{form[2]}')
    return ' = '.join(pieces) + ' = 0'


def _pattern_forms(shape: Sequence[PatternForm], n: int) -> Iterator[List[PatternForm]]:
    pairs = [index for index, form in enumerate(shape) if form[0] == 'pair']
    if not pairs:
        yield list(shape)
        return
    for exponents in _exponent_choices(len(pairs), n):
        forms = list(shape)
        for index, k in zip(pairs, exponents):
            forms[index] = forms[index] + (k,)
        yield forms


def _exponent_choices(length: int, n: int) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for k in range(n):
        for rest in _exponent_choices(length - 1, n):
            yield (k,) + rest


def count_pattern_candidates(count: int, n: int) -> int:
    forms_needed = count - 3
    total = 0
    for shape in _pattern_shapes(list(range(count)), forms_needed):
        total += n ** sum(1 for form in shape if form[0] == 'pair')
    return total


def search_pattern_planes(cubic: CubicFourfold, n: int, budget: Optional[int] = None) -> List[PlaneInP5]:
    """
    All contained planes cut out by forms x_i + zeta_n^k x_j and x_p with disjoint supports.
    Cubics with a linear section are searched in ambient coordinates, keeping planes inside the section
    """
    if n < 1:
        raise ValueError(f'root order must be positive, got {n}')

    count = cubic.ambient_count
    budget = budget if budget is not None else get_enumeration_budget()
    ensure_within_budget(f'pattern-plane search on {cubic.name}', count_pattern_candidates(count, n), budget)
    logging.info(f'searching pattern planes on {cubic.name} with n = {n}')

    found = {}
    for shape in _pattern_shapes(list(range(count)), count - 3):
        for forms in _pattern_forms(shape, n):
            plane = pattern_plane(forms, count, n)
            if plane not in found and contains_plane(cubic, plane):
                found[plane] = plane

    logging.info(f'{len(found)} pattern planes found on {cubic.name}')
    return list(found.values())


def find_disjoint_pair(planes: Sequence[PlaneInP5]) -> Optional[Tuple[PlaneInP5, PlaneInP5]]:
    """First pair, in list order, of planes with empty intersection"""
    for first, second in combinations(planes, 2):
        if planes_disjoint(first, second):
            return first, second
    return None
