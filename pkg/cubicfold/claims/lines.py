"""Module containing the ruled-line incidence claims and the line count on the fixed cubic surface"""
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from ..cert.lines import find_split_prime, line_in_form, ruled_lines_between
from ..families.catalog import catalog_member, diagonal_surface_v1_member, family_generator
from ..families.fixed_locus import fixed_locus_on_x
from ..mpoly.polynomial import MultiPoly
from .base import BaseClaimController, ClaimCheck, claim, outcome
from .options import RunOptions


def unit_vector(index: int, count: int = 6) -> List[Fraction]:
    return [Fraction(int(i == index)) for i in range(count)]


# the lines <e2, e3> and <e4, e5>
RULED_LINES = ((unit_vector(2), unit_vector(3)), (unit_vector(4), unit_vector(5)))

# exponents of x2 x4^2, x3 x4^2, x2 x5^2, x3 x5^2 and of the matching a_i b_j^2
_MIXED_TERMS = (((0, 0, 1, 0, 2, 0), (1, 0, 2, 0)),
                ((0, 0, 0, 1, 2, 0), (0, 1, 2, 0)),
                ((0, 0, 1, 0, 0, 2), (1, 0, 0, 2)),
                ((0, 0, 0, 1, 0, 2), (0, 1, 0, 2)))


def expected_incidence(form: MultiPoly) -> MultiPoly:
    """sum of c a_i b_j^2 over the terms c x_(2+i) x_(4+j)^2 of the form"""
    return MultiPoly(4, {target: form.coefficient(source) for source, target in _MIXED_TERMS})


def _join_spot_check(form: MultiPoly, conditions) -> Tuple[Dict, bool]:
    """With b1 = 0 the condition reads (c0 a0 + c1 a1) b0^2 = 0; the join of its solution must lie on X"""
    c0 = conditions.uv2.coefficient((1, 0, 2, 0))
    c1 = conditions.uv2.coefficient((0, 1, 2, 0))
    if c0 == 0 and c1 == 0:
        point = unit_vector(2)
    else:
        point = [Fraction(0)] * 6
        point[2], point[3] = c1, -c0
    contained = line_in_form(form, point, unit_vector(4))
    return {'a': [str(point[2]), str(point[3])], 'b': [1, 0], 'join_contained': contained}, contained


def _ruled_check(name: str, seed: int):
    def check():
        cubic, generators = catalog_member(name, seed)
        form = cubic.reduced_form
        conditions = ruled_lines_between(cubic, RULED_LINES[0], RULED_LINES[1])
        expected = expected_incidence(form)
        names = ['a0', 'a1', 'b0', 'b1']
        spot, spot_holds = _join_spot_check(form, conditions)
        computed = {'u2v': conditions.u2v.to_expression(names), 'uv2': conditions.uv2.to_expression(names),
                    'expected_uv2': expected.to_expression(names), 'spot_check': spot}
        holds = conditions.u2v.is_zero() and conditions.uv2.is_proportional_to(expected) and spot_holds
        return outcome(computed, holds, provenance=generators[0].provenance)

    return check


class RuledLineClaims(BaseClaimController):
    """Lines joining a point of <e2, e3> to a point of <e4, e5>, sweeping out cubic scrolls"""
    group = 'ruled-lines'

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        yield claim('RULED-G4', 'incidence condition a2(alpha b4^2 + gamma b5^2) + a3(beta b4^2 + delta b5^2) on G4',
                    {'u2v': '0', 'uv2': 'alpha a0 b0^2 + beta a1 b0^2 + gamma a0 b1^2 + delta a1 b1^2'},
                    _ruled_check('G4', options.seed))
        yield claim('RULED-G8', 'incidence condition b3 a4^2 - a2 b5^2 on G8, for the lines <e2, e3> and <e4, e5>',
                    {'u2v': '0', 'uv2': 'd a1 b0^2 + e a0 b1^2'}, _ruled_check('G8', options.seed))


def _surface_lines_check(seed: int):
    def check():
        cubic = diagonal_surface_v1_member(seed)
        report = fixed_locus_on_x(cubic, family_generator('V1'))
        surface = report.components_of_kind('surface')[0].equation
        s, count = find_split_prime(surface, p_min=7)
        computed = {'surface': surface.to_expression(['t0', 't1', 't2', 't3']), 'prime': s.prime, 'lines': count}
        return outcome(computed, count == 27, provenance='derived')

    return check


class SurfaceLineClaims(BaseClaimController):
    group = 'surface-lines'

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        yield claim('LINES-V1', 'the 27 lines on the fixed cubic surface of a V1 member', {'lines': 27},
                    _surface_lines_check(options.seed))
