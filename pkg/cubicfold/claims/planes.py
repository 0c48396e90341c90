"""Module containing the plane claims: pattern-plane counts and disjoint pairs"""
from functools import lru_cache
from typing import Iterator, List, Sequence

from ..cert.planes import (PlaneInP5, contains_plane, find_disjoint_pair, pattern_plane, planes_disjoint,
                           search_pattern_planes)
from ..families.catalog import ambient_model, catalog_member, fermat_split_v2_member
from ..families.cubic import CubicFourfold
from .base import BaseClaimController, ClaimCheck, claim, outcome
from .options import RunOptions


@lru_cache(maxsize=None)
def clebsch_planes(budget=None) -> List[PlaneInP5]:
    """Pattern planes with n = 2 on the Clebsch cubic, searched once per budget"""
    cubic, _ = ambient_model('Clebsch')
    return search_pattern_planes(cubic, 2, budget=budget)


def _count_check(cubic: CubicFourfold, n: int, expected: int, options: RunOptions):
    def check():
        planes = search_pattern_planes(cubic, n, budget=options.budget)
        return outcome({'planes': len(planes), 'n': n}, len(planes) == expected, provenance='derived')

    return check


def _clebsch_count_check(options: RunOptions):
    def check():
        planes = clebsch_planes(options.budget)
        return outcome({'planes': len(planes), 'n': 2}, len(planes) == 105, provenance='derived')

    return check


def _pair_computed(cubic: CubicFourfold, first: PlaneInP5, second: PlaneInP5):
    computed = {'first': first.label, 'second': second.label,
                'contained': [contains_plane(cubic, first), contains_plane(cubic, second)],
                'disjoint': planes_disjoint(first, second)}
    return computed, all(computed['contained']) and computed['disjoint']


def _explicit_pair_check(cubic: CubicFourfold, first: Sequence, second: Sequence, n: int):
    def check():
        count = cubic.ambient_count
        computed, holds = _pair_computed(cubic, pattern_plane(first, count, n), pattern_plane(second, count, n))
        return outcome(computed, holds, provenance='derived')

    return check


def _clebsch_pair_check(options: RunOptions):
    def check():
        cubic, _ = ambient_model('Clebsch')
        pair = find_disjoint_pair(clebsch_planes(options.budget))
        if pair is None:
            return outcome({'disjoint_pair': None}, False, provenance='derived')
        computed, holds = _pair_computed(cubic, *pair)
        return outcome(computed, holds, provenance='derived')

    return check


def _listed_planes_check(name: str, n: int, patterns: Sequence[Sequence], options: RunOptions):
    """The listed planes lie on the member and are among the pattern planes found with n"""
    def check():
        cubic, generators = catalog_member(name, options.seed)
        wanted = [pattern_plane(forms, cubic.ambient_count, n) for forms in patterns]
        found = set(search_pattern_planes(cubic, n, budget=options.budget))
        computed = {'planes': [plane.label for plane in wanted],
                    'contained': [contains_plane(cubic, plane) for plane in wanted],
                    'found_by_search': [plane in found for plane in wanted]}
        holds = all(computed['contained']) and all(computed['found_by_search'])
        return outcome(computed, holds, provenance=generators[0].provenance)

    return check


# x_i + x_{i+3} = 0 and x_i + zeta_3 x_{i+3} = 0
V2_PAIR = ([('pair', 0, 3, 0), ('pair', 1, 4, 0), ('pair', 2, 5, 0)],
           [('pair', 0, 3, 1), ('pair', 1, 4, 1), ('pair', 2, 5, 1)])

X15_PAIR = ([('zero', 0), ('pair', 1, 2, 0), ('pair', 3, 4, 0), ('pair', 5, 6, 0), ('zero', 7)],
            [('zero', 1), ('pair', 0, 2, 0), ('pair', 3, 5, 0), ('pair', 4, 7, 0), ('zero', 6)])

# a_i x0 + b_i x1 = alpha x2 + beta x3 = x5 = 0
G4_PLANES = [[('pair', 0, 1, k), ('pair', 2, 3, 0), ('zero', 5)] for k in range(3)]

G8_PLANES = [[('zero', 0), ('zero', 3), ('zero', 4)],
             [('pair', 0, 1, 1), ('zero', 3), ('zero', 4)],
             [('pair', 0, 1, 3), ('zero', 3), ('zero', 4)]]


class PlaneClaims(BaseClaimController):
    group = 'planes'

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        fermat, _ = catalog_member('Fermat', options.seed)
        yield claim('PLANE-FERMAT', 'planes x_i + x_j = x_k + x_l = x_m + x_n = 0 on the Fermat cubic',
                    {'planes': 405, 'n': 3}, _count_check(fermat, 3, 405, options))
        yield claim('PLANE-CLEBSCH', 'the 105 Fermat type planes on the Clebsch cubic', {'planes': 105, 'n': 2},
                    _clebsch_count_check(options))
        yield claim('PLANE-V2-DISJOINT', 'two disjoint planes on the V2 member f(x0,x1,x2) + g(x3,x4,x5)',
                    {'contained': [True, True], 'disjoint': True},
                    _explicit_pair_check(fermat_split_v2_member(), V2_PAIR[0], V2_PAIR[1], 3))
        yield claim('PLANE-CLEBSCH-DISJOINT', 'two disjoint Fermat type planes on the Clebsch cubic',
                    {'contained': [True, True], 'disjoint': True}, _clebsch_pair_check(options))
        x15, _ = ambient_model('X15')
        yield claim('PLANE-X15-DISJOINT', 'two disjoint planes on X15', {'contained': [True, True], 'disjoint': True},
                    _explicit_pair_check(x15, X15_PAIR[0], X15_PAIR[1], 2))
        yield claim('PLANE-G4', 'the three planes on the G4 sub-family',
                    {'contained': [True] * 3, 'found_by_search': [True] * 3},
                    _listed_planes_check('G4planes', 3, G4_PLANES, options))
        yield claim('PLANE-G8', 'the three planes on the G8 sub-family',
                    {'contained': [True] * 3, 'found_by_search': [True] * 3},
                    _listed_planes_check('G8planes', 4, G8_PLANES, options))
