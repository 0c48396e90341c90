"""Module containing the lattice claims: the Gram matrix of V3, the C42 label and the A6 K3 surface"""
from typing import Dict, Iterator

from ..families.catalog import ambient_model, catalog_member
from ..latticelab.discriminants import has_associated_k3, hassett_nonempty, label_discriminant
from ..latticelab.lattice import IntegerLattice, enumerate_norm_vectors, lattice_invariants
from ..latticelab.reference import V3_GRAM
from ..mpoly.polynomial import MultiPoly
from .base import BaseClaimController, ClaimCheck, claim, outcome
from .options import RunOptions

NORM_VECTOR = (1, 1, 1)


def _gram_check():
    invariants = lattice_invariants(IntegerLattice(V3_GRAM))
    return outcome(invariants, tuple(invariants) == (3, 60, True), provenance='derived')


def _norm_14_check():
    vectors = enumerate_norm_vectors(IntegerLattice(V3_GRAM), 14)
    return outcome({'count': len(vectors), 'contains': list(NORM_VECTOR) if NORM_VECTOR in vectors else None},
                   NORM_VECTOR in vectors, provenance='derived')


def _norm_13_check():
    vectors = enumerate_norm_vectors(IntegerLattice(V3_GRAM), 13)
    return outcome({'count': len(vectors)}, not vectors, provenance='derived')


def _label_check():
    label = label_discriminant(3, 14, 0)
    computed = {'d': label.d, 'gram': label.gram, 'hassett_nonempty': hassett_nonempty(label.d),
                'associated_k3': has_associated_k3(label.d)}
    return outcome(computed, label.d == 42 and computed['hassett_nonempty'] and computed['associated_k3'],
                   provenance='derived')


def split_by_last_variable(form: MultiPoly) -> Dict[int, MultiPoly]:
    """F(y, s) = sum_k s^k F_k(y), keyed by k"""
    count = form.variable_count - 1
    parts: Dict[int, Dict] = {}
    for monomial, coefficient in form.terms.items():
        parts.setdefault(monomial[count], {})[tuple(monomial[:count])] = coefficient
    return {k: MultiPoly(count, terms) for k, terms in parts.items()}


def _a6_k3_check():
    pencil, _ = ambient_model('A6pencil')
    surface, _ = catalog_member('A6K3')
    parts = split_by_last_variable(pencil.reduced_form)
    zero = MultiPoly.zero(surface.variable_count)
    cubic_part, quadric_part = parts.get(0, zero), parts.get(1, zero)
    higher_vanish = all(parts.get(k, zero).is_zero() for k in (2, 3))
    computed = {'cubic_matches': cubic_part == surface.form,
                'quadric_matches': quadric_part == surface.companion_forms[0],
                'higher_terms_vanish': higher_vanish}
    return outcome(computed, all(computed.values()), provenance='derived',
                   notes=['the lines through the cone point of X_0 are parametrized by V(Q, C)'])


class LatticeClaims(BaseClaimController):
    group = 'lattice'

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        yield claim('LAT-GRAM', 'Gram matrix of the primitive algebraic sublattice for V3',
                    {'rank': 3, 'determinant': 60, 'positive_definite': True}, _gram_check)
        yield claim('LAT-NORM14', 'a vector v of the V3 lattice with v^2 = 14', {'contains': list(NORM_VECTOR)},
                    _norm_14_check)
        yield claim('LAT-NORM13', 'the V3 lattice is even, so no vector has norm 13', {'count': 0}, _norm_13_check)
        yield claim('LAT-42', 'K = <h^2, v> places X in C42', {'d': 42, 'associated_k3': True}, _label_check)
        yield claim('LAT-A6K3', 'the K3 surface V(Q, C) of the A6 pencil at t = 0',
                    {'cubic_matches': True, 'quadric_matches': True, 'higher_terms_vanish': True}, _a6_k3_check)
