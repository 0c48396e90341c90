"""Module containing the group closure claims"""
from typing import Iterator

from ..autgrp.group import group_closure, satisfies_dihedral_relation, validate_group_order
from ..families.catalog import ambient_model, catalog_member
from .base import BaseClaimController, ClaimCheck, claim, outcome
from .options import RunOptions


def _closure_check(name: str, expected: int, seed: int, dihedral: bool = False, note: str = ''):
    def check():
        _, generators = catalog_member(name, seed)
        group = group_closure(generators)
        computed = {'order': group.order, 'order_within_bounds': validate_group_order(group)}
        holds = group.order == expected and computed['order_within_bounds']
        if dihedral:
            computed['dihedral_relation'] = satisfies_dihedral_relation(generators[0], generators[1])
            holds = holds and computed['dihedral_relation']
        provenance = 'repaired' if any(g.provenance == 'repaired' for g in generators) else 'printed'
        return outcome(computed, holds, provenance=provenance, notes=[note])

    return check


def _clebsch_check():
    _, generators = ambient_model('Clebsch')
    group = group_closure(generators)
    computed = {'order': group.order, 'order_within_bounds': validate_group_order(group)}
    return outcome(computed, group.order == 2520 and computed['order_within_bounds'], provenance='derived',
                   notes=['permutations of the seven ambient coordinates'])


class GroupClaims(BaseClaimController):
    group = 'groups'

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        seed = options.seed
        yield claim('GRP-F5', 'dihedral group of order 10 acting on F5',
                    {'order': 10, 'order_within_bounds': True, 'dihedral_relation': True},
                    _closure_check('F5', 10, seed, dihedral=True))
        yield claim('GRP-F7', 'group of order 21 acting on F7', {'order': 21, 'order_within_bounds': True},
                    _closure_check('F7', 21, seed))
        yield claim('GRP-KLEIN', 'group of order 55 inside the automorphisms of the Klein cubic',
                    {'order': 55, 'order_within_bounds': True},
                    _closure_check('Klein', 55, seed,
                                   note='whether the full symplectic group is L2(11) of order 660 is not decided '
                                        'by these two generators'))
        yield claim('GRP-CLEBSCH', 'alternating group A7 acting on the Clebsch cubic',
                    {'order': 2520, 'order_within_bounds': True}, _clebsch_check)
