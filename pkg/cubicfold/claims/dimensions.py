"""Module containing the family dimension claims"""
from typing import Iterator

from ..autgrp.automorphism import ProjectiveAutomorphism
from ..families.catalog import EXPECTED_DIMENSIONS, family_spec
from ..families.eigenspaces import family_dimension
from .base import BaseClaimController, ClaimCheck, claim, claim_suffix, outcome
from .options import RunOptions

IDENTITY_DIMENSION = 20


def _identity_check():
    dimension = family_dimension(ProjectiveAutomorphism.identity(6))
    return outcome(dimension, dimension == IDENTITY_DIMENSION, provenance='derived')


def _family_check(name: str):
    def check():
        spec = family_spec(name)
        computed = {'moduli_dimension': spec.moduli_dimension, 'span_dimension': spec.span_dimension,
                    'generator': spec.generator.describe()}
        return outcome(computed, spec.moduli_dimension == spec.expected_dimension, provenance=spec.provenance)

    return check


class DimensionClaims(BaseClaimController):
    """dim of the semi-invariant cubics, projectivized, minus the centralizer of the generator"""
    group = 'dimensions'

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        yield claim('DIM-ID', 'moduli of all cubic fourfolds', IDENTITY_DIMENSION, _identity_check)
        for name, dimension in EXPECTED_DIMENSIONS.items():
            yield claim(f'DIM-{claim_suffix(name)}', f'dimension of the family {name}',
                        {'moduli_dimension': dimension}, _family_check(name))
