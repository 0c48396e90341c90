"""Module containing the symplecticity labels and PGL orders of the catalog generators"""
from typing import Iterator, List, Tuple

from ..autgrp.automorphism import ProjectiveAutomorphism, order_in_pgl
from ..autgrp.semi_invariance import is_symplectic, semi_invariance
from ..families.catalog import FAMILY_NAMES, catalog_member, extra_generators, x15_non_symplectic_tau
from ..families.cubic import CubicFourfold
from .base import BaseClaimController, ClaimCheck, claim, claim_suffix, outcome
from .options import RunOptions

GENERATOR_ORDERS = {'V1': 3, 'V2': 3, 'V3': 3, 'F5': 5, 'F7': 7, 'Klein': 11, 'F6a': 6, 'F6b': 6,
                    'G9a': 9, 'G9b': 9, 'G4': 4, 'G8': 8, 'X12': 12, 'X15': 15, 'X2': 6, 'A6pencil': 5}

# catalog cubics outside the families whose first generator is checked
SPECIAL_GENERATORS = ('X12', 'X15', 'X2', 'A6pencil')

# families with a second generator of the group
EXTRA_GENERATOR_FAMILIES = ('F5', 'F7', 'Klein')


def _symplectic_check(cubic: CubicFourfold, generator: ProjectiveAutomorphism, expected: bool):
    def check():
        form = cubic.reduced_form
        computed = {'symplectic': is_symplectic(form, generator), 'scalar': semi_invariance(form, generator),
                    'determinant': generator.determinant(), 'generator': generator.describe()}
        return outcome(computed, computed['symplectic'] == expected, provenance=generator.provenance)

    return check


def _order_check(generator: ProjectiveAutomorphism, expected: int):
    def check():
        order = order_in_pgl(generator)
        return outcome(order, order == expected, provenance=generator.provenance)

    return check


def _generators(options: RunOptions) -> List[Tuple[str, CubicFourfold, ProjectiveAutomorphism]]:
    entries = []
    for name in FAMILY_NAMES + SPECIAL_GENERATORS:
        cubic, generators = catalog_member(name, options.seed)
        entries.append((name, cubic, generators[0]))
    return entries


class SymplecticClaims(BaseClaimController):
    group = 'symplectic'

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        entries = _generators(options)
        for name, cubic, generator in entries:
            yield claim(f'SYMP-{claim_suffix(name)}', f'symplectic generator of {name}', True,
                        _symplectic_check(cubic, generator, True))

        for name in EXTRA_GENERATOR_FAMILIES:
            cubic, _ = catalog_member(name, options.seed)
            tau = extra_generators(name)[0]
            yield claim(f'SYMP-{claim_suffix(name)}-TAU', f'the involution or cycle tau acting on {name}', True,
                        _symplectic_check(cubic, tau, True))

        x15, _ = catalog_member('X15', options.seed)
        yield claim('SYMP-X15-TAU', 'the non-symplectic order-3 scaling on X15', False,
                    _symplectic_check(x15, x15_non_symplectic_tau(), False))

        for name, _, generator in entries:
            yield claim(f'ORD-{claim_suffix(name)}', f'order of the generator of {name} in PGL(6)',
                        GENERATOR_ORDERS[name], _order_check(generator, GENERATOR_ORDERS[name]))
