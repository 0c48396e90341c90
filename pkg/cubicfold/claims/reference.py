"""Module containing published values that are carried into reports without recomputation"""
from typing import Iterator

from ..latticelab.reference import (ALGEBRAIC_LATTICE_RANKS, MAXIMAL_COINVARIANT_RANKS, NATURAL_LOCUS_DIMENSIONS,
                                    PRIMITIVE_ALGEBRAIC_RANKS, moduli_dimension)
from .base import BaseClaimController, ClaimCheck, claim, claim_suffix, outcome
from .options import RunOptions

_REASON = 'needs the action on the middle cohomology lattice, which is not computed'


def _reference(value):
    def check():
        return outcome(value, None, provenance='printed', notes=[_REASON])

    return check


class ReferenceClaims(BaseClaimController):
    group = 'reference'

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        for name, rank in ALGEBRAIC_LATTICE_RANKS.items():
            value = {'rank': rank}
            if name in PRIMITIVE_ALGEBRAIC_RANKS:
                value['primitive_rank'] = PRIMITIVE_ALGEBRAIC_RANKS[name]
            yield claim(f'REF-RANK-{claim_suffix(name)}', f'rank of the algebraic lattice of a generic {name} member',
                        value, _reference(value))

        ranks = {'coinvariant_ranks': list(MAXIMAL_COINVARIANT_RANKS),
                 'moduli_dimensions': [moduli_dimension(rank) for rank in MAXIMAL_COINVARIANT_RANKS]}
        yield claim('REF-COINVARIANT', 'coinvariant ranks of the maximal groups and the moduli dimension 20 - rank S',
                    ranks, _reference(ranks))

        natural = {f'order_{p}': dimension for p, dimension in NATURAL_LOCUS_DIMENSIONS.items()}
        yield claim('REF-NATURAL-LOCI', 'dimensions of the loci of cubics with a symplectic automorphism of prime order',
                    natural, _reference(natural))
