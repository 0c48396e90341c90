"""Module containing ruled-line incidence conditions and line counts on cubic surfaces over F_p"""
import logging
from math import lcm
from typing import Any, List, NamedTuple, Optional, Sequence, Tuple

from ..exactnum.errors import SpecializationError
from ..exactnum.specialization import SpecializationMap, find_specialization
from ..families.cubic import CubicFourfold
from ..families.fixed_locus import restrict_to_span
from ..mpoly.polynomial import MultiPoly
from ..utils.config import get_enumeration_budget
from ..utils.errors import ensure_within_budget
from .errors import BadPrimeError, LineNotContainedError, SingularSpecializationError
from .smoothness import IntegerTerms, evaluate_mod_p, find_singular_point, specialize_form

LINE_COORDINATE_NAMES = ('a0', 'a1', 'b0', 'b1')


class RuledLineConditions(NamedTuple):
    """
    Coefficients of u^2 v and u v^2 in F(uP + vQ), P = a0 P0 + a1 P1 on the first line and
    Q = b0 Q0 + b1 Q1 on the second, as polynomials in (a0, a1, b0, b1)
    """
    u2v: MultiPoly
    uv2: MultiPoly

    def both_vanish(self) -> bool:
        return self.u2v.is_zero() and self.uv2.is_zero()


def line_in_form(form: MultiPoly, first: Sequence[Any], second: Sequence[Any]) -> bool:
    return restrict_to_span(form, [list(first), list(second)]).is_zero()


def ruled_lines_between(cubic: CubicFourfold, first_line: Sequence[Sequence[Any]],
                        second_line: Sequence[Sequence[Any]]) -> RuledLineConditions:
    """The join of P and Q lies in X exactly when both conditions vanish at (P, Q)"""
    form = cubic.reduced_form
    for line in (first_line, second_line):
        if not line_in_form(form, line[0], line[1]):
            raise LineNotContainedError(f'line spanned by {[list(v) for v in line]} is not contained in {cubic.name}')

    # variables u, v, a0, a1, b0, b1
    images = []
    for i in range(form.variable_count):
        images.append(MultiPoly(6, {
            (1, 0, 1, 0, 0, 0): first_line[0][i],
            (1, 0, 0, 1, 0, 0): first_line[1][i],
            (0, 1, 0, 0, 1, 0): second_line[0][i],
            (0, 1, 0, 0, 0, 1): second_line[1][i],
        }))
    joined = form.compose(images)

    u2v, uv2 = {}, {}
    for monomial, coefficient in joined.terms.items():
        if monomial[:2] == (2, 1):
            u2v[monomial[2:]] = coefficient
        elif monomial[:2] == (1, 2):
            uv2[monomial[2:]] = coefficient
    return RuledLineConditions(MultiPoly(4, u2v), MultiPoly(4, uv2))


def _rref_lines(p: int):
    """Canonical 2x4 reduced echelon representatives of the lines of P^3(F_p)"""
    for i in range(4):
        for j in range(i + 1, 4):
            first_free = [k for k in range(i + 1, 4) if k != j]
            second_free = list(range(j + 1, 4))
            for values in _values(p, len(first_free) + len(second_free)):
                first = [0] * 4
                second = [0] * 4
                first[i] = 1
                second[j] = 1
                for k, value in zip(first_free, values):
                    first[k] = value
                for k, value in zip(second_free, values[len(first_free):]):
                    second[k] = value
                yield first, second


def _values(p: int, length: int):
    if length == 0:
        yield ()
        return
    for value in range(p):
        for rest in _values(p, length - 1):
            yield (value,) + rest


def line_count_p3(p: int) -> int:
    return p ** 4 + p ** 3 + 2 * p ** 2 + p + 1


def _line_on_surface(terms: IntegerTerms, first: List[int], second: List[int], p: int) -> bool:
    """A binary cubic over F_p, p > 3, vanishing at four distinct points of P^1 is zero"""
    for s, t in ((1, 0), (0, 1), (1, 1), (1, p - 1)):
        point = [(s * a + t * b) % p for a, b in zip(first, second)]
        if evaluate_mod_p(terms, point, p):
            return False
    return True


def count_lines_on_cubic_surface(surface: MultiPoly, s: SpecializationMap, budget: Optional[int] = None) -> int:
    """Number of F_p-lines on V(f) in P^3 for a specialization whose reduction is smooth"""
    if surface.variable_count != 4 or not surface.is_homogeneous(3):
        raise ValueError('a cubic surface needs a homogeneous cubic in four variables')
    p = s.prime
    if p <= 3:
        raise BadPrimeError(f'p = {p} is too small for line counts')

    budget = budget if budget is not None else get_enumeration_budget()
    ensure_within_budget(f'line count mod {p}', line_count_p3(p), budget)

    terms = specialize_form(surface, s)
    if not terms:
        raise SingularSpecializationError(f'the surface vanishes identically mod {p}')
    _, point = find_singular_point(terms, 4, p)
    if point is not None:
        raise SingularSpecializationError(f'the surface is singular mod {p} at {point}')

    return sum(1 for first, second in _rref_lines(p) if _line_on_surface(terms, first, second, p))


def find_split_prime(surface: MultiPoly, p_min: int = 5, attempts: int = 20,
                     budget: Optional[int] = None) -> Tuple[SpecializationMap, int]:
    """First prime p = 1 mod 3, above p_min, with a smooth reduction carrying all 27 lines"""
    order = lcm(3, surface.coefficient_order())
    p = p_min
    count = 0
    for _ in range(attempts):
        try:
            s = find_specialization(order, p_min=p)
        except SpecializationError as exp:
            raise BadPrimeError(str(exp))
        try:
            count = count_lines_on_cubic_surface(surface, s, budget)
        except SingularSpecializationError as exp:
            logging.info(f'skipping p = {s.prime}: {exp}')
            count = 0
        if count == 27:
            return s, count
        p = s.prime + 1
    raise BadPrimeError(f'no prime among {attempts} tried splits all 27 lines (last count {count})')
