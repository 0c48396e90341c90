"""Module containing the claims that place one family or cubic inside another"""
from typing import Iterator

from ..autgrp.automorphism import ProjectiveAutomorphism
from ..families.catalog import catalog_member, family_generator
from ..families.eigenspaces import eigenvalue_multiplicities, invariant_cubic_space
from .base import BaseClaimController, ClaimCheck, claim, outcome
from .options import RunOptions


def _power_check(name: str, exponent: int, target: str, seed: int):
    """generator^exponent equals the target family's generator up to scalar and the member is target-invariant"""
    def check():
        cubic, generators = catalog_member(name, seed)
        power = generators[0] ** exponent
        target_generator = family_generator(target)
        equal = power.projectively_equal(target_generator)
        inside = invariant_cubic_space(target_generator).contains(cubic.reduced_form)
        computed = {'power': power.describe(), 'equals_generator': equal, 'member_in_family': inside}
        return outcome(computed, equal and inside, provenance=generators[0].provenance)

    return check


def _conjugacy_check(element: ProjectiveAutomorphism, target: str):
    """Eigenvalue multiplicities of the element match the target family's generator"""
    def check():
        found = eigenvalue_multiplicities(element)
        wanted = eigenvalue_multiplicities(family_generator(target))
        return outcome({'multiplicities': found, f'{target}_multiplicities': wanted}, found == wanted,
                       provenance=element.provenance)

    return check


class MembershipClaims(BaseClaimController):
    group = 'membership'

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        seed = options.seed
        yield claim('MEMB-G9A-V2', 'order-9 family G9a lies in V2 via the cube of its generator', True,
                    _power_check('G9a', 3, 'V2', seed))
        yield claim('MEMB-G9B-V2', 'order-9 family G9b lies in V2 via the cube of its generator', True,
                    _power_check('G9b', 3, 'V2', seed))
        yield claim('MEMB-X12-V2', 'X12 lies in V2 via the fourth power of its order-12 automorphism', True,
                    _power_check('X12', 4, 'V2', seed))
        yield claim('MEMB-F6A-V1', 'the span of F6a lies in V1', True, _power_check('F6a', 4, 'V1', seed))
        yield claim('MEMB-F6B-V3', 'the square of the F6b generator is the V3 generator', True,
                    _power_check('F6b', 2, 'V3', seed))

        _, f7 = catalog_member('F7', seed)
        yield claim('MEMB-F7-TAU', 'the order-3 tau of F7 acts like the V3 generator', True,
                    _conjugacy_check(f7[1], 'V3'))
        _, klein = catalog_member('Klein', seed)
        yield claim('MEMB-KLEIN-TAU', 'the 5-cycle tau of the Klein cubic acts like the F5 generator', True,
                    _conjugacy_check(klein[1], 'F5'))
        _, pencil = catalog_member('A6pencil', seed)
        yield claim('MEMB-A6PENCIL-F5', 'the A6 pencil lies in F5 through its 5-cycle', True,
                    _conjugacy_check(pencil[0], 'F5'))
        _, x2 = catalog_member('X2', seed)
        yield claim('MEMB-X2-V3', 'the square of the order-6 automorphism of X2 acts like the V3 generator', True,
                    _conjugacy_check(x2[0] ** 2, 'V3'))
