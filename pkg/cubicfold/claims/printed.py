"""
Module containing the printed-versus-repaired claims. Each one is checked on the printed
data under --as-printed and on the repaired data otherwise
"""
from typing import Any, Callable, Dict, Iterator, List, Sequence, Tuple

from ..autgrp.automorphism import ProjectiveAutomorphism
from ..autgrp.errors import NonInvertibleAutomorphismError
from ..autgrp.semi_invariance import semi_invariance
from ..cert.lines import ruled_lines_between
from ..families.catalog import (V3_REPAIRED_SPAN, catalog_member, extra_generators, family_generator, family_spec,
                                printed_extra_generator_images, printed_family_generator, printed_family_span)
from ..mpoly.monomial import Monomial
from .base import BaseClaimController, ClaimCheck, claim, outcome
from .lines import RULED_LINES, unit_vector
from .options import RunOptions

Verdict = Tuple[Dict[str, Any], bool]

# the lines <e2, e4> and <e3, e5> as printed for the G8 scroll
PRINTED_G8_LINES = ((unit_vector(2), unit_vector(4)), (unit_vector(3), unit_vector(5)))


def weight_classes(generator: ProjectiveAutomorphism, span: Sequence[Monomial]) -> List[int]:
    """Distinct weights of the monomials under a diagonal generator; a semi-invariant span has one"""
    _, order, weights = generator.structure
    return sorted({Monomial(m).weight(weights, order) for m in span})


def _weights_verdict(generator: ProjectiveAutomorphism, span: Sequence[Monomial]) -> Verdict:
    classes = weight_classes(generator, span)
    return {'generator': generator.describe(), 'weight_classes': classes}, len(classes) == 1


def _generator_weights(name: str) -> Tuple[Callable[[], Verdict], Callable[[], Verdict]]:
    span = printed_family_span(name)
    return (lambda: _weights_verdict(printed_family_generator(name), span),
            lambda: _weights_verdict(family_generator(name), span))


def _tau_verdict(name: str, seed: int, build: Callable[[], ProjectiveAutomorphism]) -> Verdict:
    cubic, _ = catalog_member(name, seed)
    try:
        tau = build()
    except NonInvertibleAutomorphismError as exp:
        return {'constructed': False, 'reason': str(exp)}, False
    scalar = semi_invariance(cubic.reduced_form, tau)
    return {'constructed': True, 'tau': tau.describe(), 'scalar': scalar}, scalar is not None


def _tau(name: str, seed: int) -> Tuple[Callable[[], Verdict], Callable[[], Verdict]]:
    printed = printed_extra_generator_images(name)['tau']
    return (lambda: _tau_verdict(name, seed, lambda: ProjectiveAutomorphism.permutation(printed, label=f'{name} tau')),
            lambda: _tau_verdict(name, seed, lambda: extra_generators(name)[0]))


def _outside_verdict(outside: Sequence[Monomial]) -> Verdict:
    names = [f'x{i}' for i in range(6)]
    return {'monomials_not_invariant': [m.to_expression(names) for m in outside]}, not outside


def _v3_split() -> Tuple[Callable[[], Verdict], Callable[[], Verdict]]:
    def repaired():
        basis = set(family_spec('V3').basis)
        return _outside_verdict([m for m in V3_REPAIRED_SPAN if m not in basis])

    return lambda: _outside_verdict(family_spec('V3').printed_span_outside_basis()), repaired


def _lines_verdict(seed: int, lines) -> Verdict:
    cubic, _ = catalog_member('G8', seed)
    conditions = ruled_lines_between(cubic, lines[0], lines[1])
    names = ['a0', 'a1', 'b0', 'b1']
    computed = {'u2v': conditions.u2v.to_expression(names), 'uv2': conditions.uv2.to_expression(names)}
    return computed, conditions.u2v.is_zero() and not conditions.uv2.is_zero()


def _g8_lines(seed: int) -> Tuple[Callable[[], Verdict], Callable[[], Verdict]]:
    return lambda: _lines_verdict(seed, PRINTED_G8_LINES), lambda: _lines_verdict(seed, RULED_LINES)


def _printed_check(verdicts: Tuple[Callable[[], Verdict], Callable[[], Verdict]], as_printed: bool):
    printed, repaired = verdicts

    def check():
        if as_printed:
            computed, holds = printed()
            return outcome({**computed, 'consistent': holds}, holds, provenance='printed',
                           notes=['rebuilt from the printed data'])
        computed, holds = repaired()
        _, printed_holds = printed()
        return outcome({**computed, 'consistent': holds, 'printed_consistent': printed_holds}, holds,
                       provenance='repaired')

    return check


class PrintedClaims(BaseClaimController):
    group = 'printed'

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        seed = options.seed
        entries = [
            ('PRINT-F7-PHI', 'weights of the order-7 generator of F7', _generator_weights('F7')),
            ('PRINT-F7-TAU', 'the order-3 permutation tau of F7', _tau('F7', seed)),
            ('PRINT-KLEIN-PHI', 'weights of the order-11 generator of the Klein cubic', _generator_weights('Klein')),
            ('PRINT-KLEIN-TAU', 'the order-5 permutation tau of the Klein cubic', _tau('Klein', seed)),
            ('PRINT-V3-SPLIT', 'variable split of the equation of V3', _v3_split()),
            ('PRINT-F6A-SIGMA', 'weights of the order-6 generator of F6a', _generator_weights('F6a')),
            ('PRINT-G8-SIGMA', 'weights of the order-8 generator of G8', _generator_weights('G8')),
            ('PRINT-G8-LINES', 'pairing of the lines P2P4 and P3P5 in the G8 scroll condition', _g8_lines(seed)),
        ]
        for claim_id, location, verdicts in entries:
            yield claim(claim_id, location, {'consistent': True}, _printed_check(verdicts, options.as_printed))
