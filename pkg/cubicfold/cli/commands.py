"""Module containing the subcommands of the cubicfold command line"""
import logging
import time
from collections import defaultdict
from typing import Any, Dict, List, Optional, Sequence

from sympy import isprime

from .. import __version__
from ..autgrp.automorphism import ProjectiveAutomorphism, order_in_pgl
from ..autgrp.semi_invariance import is_symplectic, semi_invariance
from ..cert.errors import BadPrimeError
from ..cert.smoothness import SmoothnessCertificate, certify_generic_member, certify_smooth, specialization_for
from ..claims.options import RunOptions
from ..claims.registry import run_claims
from ..claims.smoothness import second_certificate
from ..families.catalog import CATALOG_NAMES, FAMILY_NAMES, catalog_member, family_spec
from ..families.cubic import CubicFourfold
from ..families.eigenspaces import family_dimension, invariant_cubic_space
from ..families.fixed_locus import fixed_locus_on_x
from ..latticelab.discriminants import admissible_discriminants, equivariant_pairs, fano_special_d
from ..latticelab.lattice import IntegerLattice, enumerate_norm_vectors, lattice_invariants
from ..report.models import VerificationReport
from ..report.renderers import render_section

FAMILY_ANALYSES = ('dim', 'fixed_locus', 'invariants', 'symplectic')

DEFAULT_ADMISSIBLE_BOUND = 50
DEFAULT_FANO_BOUND = 100
DEFAULT_EQUIVARIANT_BOUND = 20


def validate_primes(primes: Sequence[int]) -> None:
    """Primes given with --prime must be primes other than 2 and 3"""
    for p in primes:
        if p in (2, 3) or not isprime(p):
            raise BadPrimeError(f'{p} cannot be used for reduction; pass a prime p >= 5')


def cmd_verify_all(options: RunOptions) -> VerificationReport:
    validate_primes(options.primes)

    start = time.perf_counter()
    records = run_claims(options)
    elapsed = time.perf_counter() - start

    timing = None
    if options.timing:
        timing = defaultdict(float)
        for record in records:
            timing[record.group] += record.wall_time or 0.0
        timing = {group: round(seconds, 3) for group, seconds in timing.items()}
        timing['total'] = round(elapsed, 3)

    return VerificationReport(tool_version=__version__, options=options.report_summary(),
                              catalog_entries=list(CATALOG_NAMES), records=records, timing=timing)


def _dimension_section(name: str, cubic: CubicFourfold, generator: ProjectiveAutomorphism) -> Dict[str, Any]:
    if name in FAMILY_NAMES:
        spec = family_spec(name)
        return {'dimension': spec.moduli_dimension, 'expected': spec.expected_dimension,
                'span_dimension': spec.span_dimension, 'provenance': spec.provenance}
    scalar = semi_invariance(cubic.reduced_form, generator)
    return {'dimension': family_dimension(generator, scalar if scalar is not None else 1),
            'note': f'cubics semi-invariant under the first generator of {name}'}


def _invariants_section(name: str, cubic: CubicFourfold, generator: ProjectiveAutomorphism) -> Dict[str, Any]:
    names = cubic.reduced_variable_names
    if name in FAMILY_NAMES:
        spec = family_spec(name)
        monomials, scalar = spec.basis, spec.scalar
    else:
        scalar = semi_invariance(cubic.reduced_form, generator)
        monomials = invariant_cubic_space(generator, scalar if scalar is not None else 1).monomials
    return {'generator': generator.describe(), 'scalar': str(scalar), 'span_dimension': len(monomials),
            'monomials': [m.to_expression(names) for m in monomials]}


def _fixed_locus_section(cubic: CubicFourfold, generator: ProjectiveAutomorphism) -> Dict[str, Any]:
    report = fixed_locus_on_x(cubic, generator)
    return {'shape': report.shape(), 'finite': report.is_finite(),
            'eigenspaces': [component.summary() for component in report.components]}


def _symplectic_section(cubic: CubicFourfold, generator: ProjectiveAutomorphism) -> Dict[str, Any]:
    form = cubic.reduced_form
    return {'generator': generator.describe(), 'order': order_in_pgl(generator),
            'scalar': str(semi_invariance(form, generator)), 'determinant': str(generator.determinant()),
            'symplectic': is_symplectic(form, generator), 'provenance': generator.provenance}


def cmd_family(name: str, analyses: Sequence[str], options: RunOptions) -> str:
    """The requested analyses of a catalog cubic; every analysis when none is requested"""
    cubic, generators = catalog_member(name, options.seed)
    generator = generators[0]
    analyses = [a for a in FAMILY_ANALYSES if a in analyses] or list(FAMILY_ANALYSES)

    data: Dict[str, Any] = {'name': name, 'seed': options.seed, 'equation': cubic.reduced_expression()}
    if 'dim' in analyses:
        data['dimension'] = _dimension_section(name, cubic, generator)
    if 'invariants' in analyses:
        data['invariants'] = _invariants_section(name, cubic, generator)
    if 'symplectic' in analyses:
        data['symplectic'] = _symplectic_section(cubic, generator)
    if 'fixed_locus' in analyses:
        data['fixed_locus'] = _fixed_locus_section(cubic, generator)
    return render_section(f'family {name}', data, options.format)


def smoothness_certificates(name: str, options: RunOptions) -> List[SmoothnessCertificate]:
    """
    One certificate per --prime when several are given. Otherwise a certificate at --prime or at
    the smallest usable prime, followed by a second one at the next prime when the first is smooth
    """
    validate_primes(options.primes)
    primes: List[Optional[int]] = list(options.primes) or [None]

    certificates = []
    for prime in primes:
        if name in FAMILY_NAMES:
            certificate = certify_generic_member(name, options.seed, prime=prime, threads=options.threads,
                                                 budget=options.budget)
        else:
            cubic, _ = catalog_member(name, options.seed)
            certificate = certify_smooth(cubic, specialization_for(cubic, prime), threads=options.threads,
                                         budget=options.budget)
        logging.info(f'{name} mod {certificate.prime}: {certificate.verdict}')
        certificates.append(certificate)

    first = certificates[0]
    if len(primes) == 1 and first.is_smooth:
        seed = first.seed if name in FAMILY_NAMES else None
        cubic, _ = catalog_member(name, options.seed if seed is None else seed)
        second = second_certificate(cubic, first, options, seed)
        if second is not None:
            logging.info(f'{name} mod {second.prime}: {second.verdict}')
            certificates.append(second)
    return certificates


def cmd_smooth(name: str, options: RunOptions) -> str:
    certificates = smoothness_certificates(name, options)
    data = {'name': name, 'certificates': [c.summary(include_timing=options.timing) for c in certificates]}
    return render_section(f'smoothness {name}', data, options.format)


def cmd_numerology(admissible: Optional[int], fano: Optional[int], equivariant: Optional[int],
                   options: RunOptions) -> str:
    """Admissible discriminants, Fano-special d and equivariant pairs; all three with default bounds when none is asked"""
    if admissible is None and fano is None and equivariant is None:
        admissible, fano, equivariant = DEFAULT_ADMISSIBLE_BOUND, DEFAULT_FANO_BOUND, DEFAULT_EQUIVARIANT_BOUND

    data: Dict[str, Any] = {}
    if admissible is not None:
        data['admissible'] = admissible_discriminants(admissible)
    if fano is not None:
        data['fano_special'] = [{'d': d, 'n': n} for d, n in fano_special_d(fano)]
    if equivariant is not None:
        data['equivariant_pairs'] = [pair._asdict() for pair in equivariant_pairs(equivariant)]
    return render_section('numerology', data, options.format)


def cmd_lattice(gram: List[List[int]], norm: Optional[int], bound: Optional[int], options: RunOptions) -> str:
    lattice = IntegerLattice(gram)
    invariants = lattice_invariants(lattice)
    data: Dict[str, Any] = {'gram': lattice.gram, 'rank': invariants.rank, 'determinant': invariants.determinant,
                            'positive_definite': invariants.positive_definite}
    if norm is not None:
        vectors = enumerate_norm_vectors(lattice, norm, bound)
        data['norm'] = norm
        data['vector_count'] = len(vectors)
        data['vectors'] = [list(v) for v in vectors]
    return render_section('lattice', data, options.format)


