"""Module containing the claims comparing V3 and F7 with the natural loci of their orders"""
from typing import Iterator

from ..families.catalog import family_spec
from ..latticelab.reference import NATURAL_FAMILIES, NATURAL_LOCUS_DIMENSIONS
from .base import BaseClaimController, ClaimCheck, claim, claim_suffix, outcome
from .fixed_loci import generic_fixed_locus
from .options import RunOptions


def _naturality_check(name: str, seed: int):
    def check():
        order, dimension = NATURAL_FAMILIES[name]
        spec = family_spec(name)
        report, _ = generic_fixed_locus(name, seed)
        excess = spec.moduli_dimension - NATURAL_LOCUS_DIMENSIONS[order]
        computed = {'family_dimension': spec.moduli_dimension,
                    'natural_locus_dimension': NATURAL_LOCUS_DIMENSIONS[order],
                    'excess': excess, 'finite_fixed_locus': report.is_finite()}
        holds = spec.moduli_dimension == dimension and excess == 1 and report.is_finite()
        return outcome(computed, holds, provenance=spec.provenance,
                       notes=['natural locus dimensions are reference values'])

    return check


class NaturalityClaims(BaseClaimController):
    group = 'naturality'

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        for name, (order, dimension) in NATURAL_FAMILIES.items():
            expected = {'family_dimension': dimension, 'excess': 1, 'finite_fixed_locus': True}
            yield claim(f'NAT-{claim_suffix(name)}',
                        f'{name} exceeds the natural locus for symplectic order {order} by one dimension',
                        expected, _naturality_check(name, options.seed))
