"""Module containing the smoothness certificate claims"""
import logging
from typing import Iterator, List, Optional

from ..cert.errors import BadPrimeError
from ..cert.smoothness import (SINGULAR_POINT_FOUND, SmoothnessCertificate, certify_generic_member, certify_smooth,
                               projective_point_count, specialization_for)
from ..families.catalog import EXPECTED_DIMENSIONS, catalog_member
from ..families.cubic import CubicFourfold
from ..mpoly.parser import default_variable_names, parse_poly
from .base import BaseClaimController, ClaimCheck, claim, claim_suffix, outcome
from .options import RunOptions

# a second certificate is only attempted when its scan stays below this many points
SECOND_PRIME_POINT_LIMIT = 2_000_000

# catalog cubic -> (smallest prime to try, whether that prime is the one named for it)
NAMED_PRIMES = {'Fermat': 7, 'Klein': 23, 'X12': 13}

# reductions of X15 mod 5 are singular; its search starts at 7
X15_MINIMUM_PRIME = 7

CONE_POINT = [0, 0, 0, 1, 0, 0]


def second_certificate(cubic: CubicFourfold, first: SmoothnessCertificate, options: RunOptions,
                        seed: Optional[int]) -> Optional[SmoothnessCertificate]:
    if len(options.primes) > 1:
        s = specialization_for(cubic, options.primes[1])
    else:
        try:
            s = specialization_for(cubic, p_min=first.prime + 1)
        except BadPrimeError:
            return None
    if projective_point_count(s.prime, cubic.variable_count) > SECOND_PRIME_POINT_LIMIT and len(options.primes) < 2:
        logging.info(f'second certificate for {cubic.name} mod {s.prime} skipped')
        return None
    return certify_smooth(cubic, s, threads=options.threads, budget=options.budget, seed=seed)


def _outcome_for(cubic: CubicFourfold, first: SmoothnessCertificate, options: RunOptions, provenance: str,
                 seed: Optional[int] = None):
    notes: List[str] = []
    second = None
    if first.is_smooth:
        second = second_certificate(cubic, first, options, seed)
        if second is None:
            notes.append('no second prime with an affordable scan')
        elif not second.is_smooth:
            notes.append(f'reduction mod {second.prime} is {second.verdict}; the certificate mod {first.prime} stands')
    if first.note:
        notes.append(first.note)

    computed = {'verdict': first.verdict, 'certificates': [first.summary(options.timing)]}
    if second is not None:
        computed['certificates'].append(second.summary(options.timing))
    return outcome(computed, first.is_smooth, provenance=provenance, notes=notes)


def _named_check(name: str, options: RunOptions):
    def check():
        cubic, generators = catalog_member(name, options.seed)
        if options.primes:
            s = specialization_for(cubic, options.primes[0])
        elif name == 'X15':
            s = specialization_for(cubic, p_min=X15_MINIMUM_PRIME)
        else:
            s = specialization_for(cubic, NAMED_PRIMES[name])
        first = certify_smooth(cubic, s, threads=options.threads, budget=options.budget)
        return _outcome_for(cubic, first, options, provenance=generators[0].provenance)

    return check


def _family_check(name: str, options: RunOptions):
    def check():
        prime = options.primes[0] if options.primes else None
        first = certify_generic_member(name, options.seed, prime=prime, threads=options.threads,
                                       budget=options.budget)
        cubic, generators = catalog_member(name, first.seed)
        result = _outcome_for(cubic, first, options, provenance=generators[0].provenance, seed=first.seed)
        if first.seed != options.seed:
            return result._replace(notes=result.notes + (f'member seed {first.seed}',))
        return result

    return check


def cone() -> CubicFourfold:
    """x0^3 + x1^3 + x2^3 in six variables, singular along x0 = x1 = x2 = 0"""
    return CubicFourfold('cone', parse_poly('x0^3 + x1^3 + x2^3', default_variable_names(6)))


def _cone_check(options: RunOptions):
    def check():
        cubic = cone()
        s = specialization_for(cubic, NAMED_PRIMES['Fermat'])
        certificate = certify_smooth(cubic, s, threads=options.threads, budget=options.budget)
        computed = {'verdict': certificate.verdict, 'singular_point': certificate.singular_point}
        return outcome(computed, certificate.verdict == SINGULAR_POINT_FOUND, provenance='derived')

    return check


def smooth_family_names() -> List[str]:
    return [name for name in EXPECTED_DIMENSIONS if name != 'Klein']


class SmoothnessClaims(BaseClaimController):
    group = 'smoothness'

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        yield claim('SMOOTH-FERMAT', 'the Fermat cubic fourfold is smooth', {'verdict': 'smooth'},
                    _named_check('Fermat', options))
        yield claim('SMOOTH-KLEIN', 'the Klein cubic fourfold is smooth', {'verdict': 'smooth'},
                    _named_check('Klein', options))
        yield claim('SMOOTH-X12', 'the cubic X12 with an order-12 automorphism is smooth', {'verdict': 'smooth'},
                    _named_check('X12', options))
        yield claim('SMOOTH-X15', 'the cubic X15 with an order-15 automorphism is smooth', {'verdict': 'smooth'},
                    _named_check('X15', options))
        for name in smooth_family_names():
            yield claim(f'SMOOTH-{claim_suffix(name)}', f'a generic member of {name} is smooth',
                        {'verdict': 'smooth'}, _family_check(name, options))
        yield claim('SMOOTH-CONE', 'control: the cone over a plane cubic curve is singular',
                    {'verdict': SINGULAR_POINT_FOUND, 'singular_point': CONE_POINT}, _cone_check(options))
