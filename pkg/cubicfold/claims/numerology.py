"""Module containing the discriminant numerology claims"""
from typing import Iterator

from ..latticelab.discriminants import (admissible_discriminants, equivariant_pairs, fano_special_d,
                                        hassett_nonempty)
from .base import BaseClaimController, ClaimCheck, claim, outcome
from .options import RunOptions

ADMISSIBLE_50 = [14, 26, 38, 42]
FANO_100 = [14, 26, 42, 62, 86]
EQUIVARIANT_20 = [(4, 2, 42, 14), (16, 9, 546, 182)]

IMPLICATION_BOUND = 1000


def _admissible_check():
    found = admissible_discriminants(50)
    return outcome(found, found == ADMISSIBLE_50, provenance='repaired',
                   notes=['only odd primes p = 2 mod 3 are excluded; the literal condition would exclude d = 14'])


def _fano_check():
    found = [d for d, _ in fano_special_d(100)]
    return outcome(found, found == FANO_100 and all(hassett_nonempty(d) for d in found), provenance='derived')


def _pair_check(n: int):
    def check():
        found = [tuple(pair) for pair in equivariant_pairs(n) if pair.n == n]
        expected = [pair for pair in EQUIVARIANT_20 if pair[0] == n]
        return outcome(found, found == expected, provenance='derived')

    return check


def _pairs_check():
    found = [tuple(pair) for pair in equivariant_pairs(20)]
    return outcome(found, found == EQUIVARIANT_20, provenance='derived')


def _implication_check():
    failures = [d for d in admissible_discriminants(IMPLICATION_BOUND) if not hassett_nonempty(d)]
    return outcome({'bound': IMPLICATION_BOUND, 'failures': failures}, not failures, provenance='derived')


class NumerologyClaims(BaseClaimController):
    group = 'numerology'

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        yield claim('NUM-ADMISSIBLE-50', 'cubics in C14, C26, C38 and C42 have associated K3 surfaces',
                    ADMISSIBLE_50, _admissible_check)
        yield claim('NUM-FANO-100', 'd = 2(n^2 + n + 1) with n >= 2', FANO_100, _fano_check)
        yield claim('NUM-EQ-4', 'first example: X in C42 and X\' in C14', [EQUIVARIANT_20[0]], _pair_check(4))
        yield claim('NUM-EQ-16', 'second example: n = 16 gives d = 546', [EQUIVARIANT_20[1]], _pair_check(16))
        yield claim('NUM-EQ-20', '(n^2 + n + 1)/3 + 1 = m^2 + m + 2 for n <= 20', EQUIVARIANT_20, _pairs_check)
        yield claim('NUM-K3-IMPLIES-HASSETT', 'every admissible d labels a nonempty divisor',
                    {'bound': IMPLICATION_BOUND, 'failures': []}, _implication_check)
