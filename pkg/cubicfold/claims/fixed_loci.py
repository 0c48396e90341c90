"""Module containing the fixed-locus claims for the generators of the families"""
import logging
from typing import Dict, Iterator, Tuple

from ..cert.smoothness import DEFAULT_REGENERATION_ATTEMPTS
from ..families.catalog import catalog_member
from ..families.fixed_locus import FixedLocusReport, fixed_locus_on_x
from .base import BaseClaimController, ClaimCheck, claim, claim_suffix, outcome
from .options import RunOptions


def _shape(isolated_points: int = 0, curves: int = 0, surfaces: int = 0, contained_subspaces: int = 0) -> Dict:
    return {'isolated_points': isolated_points, 'curves': curves, 'surfaces': surfaces, 'hypersurfaces': 0,
            'contained_subspaces': contained_subspaces}


EXPECTED_SHAPES = {
    'V1': _shape(surfaces=1),
    'V2': _shape(curves=2),
    'V3': _shape(isolated_points=9),
    'F5': _shape(isolated_points=7),
    'G4': _shape(isolated_points=5, contained_subspaces=1),
}

LOCATIONS = {
    'V1': 'fixed cubic surface of the order-3 generator of V1',
    'V2': 'two fixed plane cubic curves of the order-3 generator of V2',
    'V3': 'nine fixed points of the order-3 generator of V3',
    'F5': 'fixed points of the order-5 generator of F5',
    'G4': 'fixed points and fixed line of the order-4 generator of G4',
}


def is_generic_locus(report: FixedLocusReport) -> bool:
    """Every binary cubic cut on a fixed line has three distinct roots"""
    return all(component.point_count == 3 for component in report.components
               if component.kind == 'points' and len(component.basis) == 2)


def generic_fixed_locus(name: str, seed: int,
                        max_attempts: int = DEFAULT_REGENERATION_ATTEMPTS) -> Tuple[FixedLocusReport, int]:
    """Fixed locus of the generator on the seeded member, moving to later seeds past degenerate members"""
    report = None
    for attempt in range(max_attempts):
        cubic, generators = catalog_member(name, seed + attempt)
        report = fixed_locus_on_x(cubic, generators[0])
        if is_generic_locus(report):
            return report, seed + attempt
        logging.warning(f'{name} member with seed {seed + attempt} has a degenerate fixed locus')
    return report, seed + max_attempts - 1


def _fixed_locus_check(name: str, seed: int):
    def check():
        report, used_seed = generic_fixed_locus(name, seed)
        cubic, generators = catalog_member(name, used_seed)
        shape = report.shape()
        verified = report.verify_points(cubic.reduced_form, generators[0])
        computed = {'shape': shape, 'components': [c.summary() for c in report.components]}
        notes = [f'member seed {used_seed}'] if used_seed != seed else []
        if not verified:
            notes.append('an explicit fixed point failed to re-verify')
        return outcome(computed, shape == EXPECTED_SHAPES[name] and verified, provenance=generators[0].provenance,
                       notes=notes)

    return check


class FixedLocusClaims(BaseClaimController):
    group = 'fixed-loci'

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        for name, shape in EXPECTED_SHAPES.items():
            yield claim(f'FIX-{claim_suffix(name)}', LOCATIONS[name], shape, _fixed_locus_check(name, options.seed))
