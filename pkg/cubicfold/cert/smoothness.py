"""Module containing smoothness certificates by exhaustive Jacobian scans over F_p"""
import logging
import time
from itertools import product
from multiprocessing import Pool
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from ..exactnum.errors import SpecializationError
from ..exactnum.specialization import SpecializationMap, find_specialization, specialize_to_int
from ..families.catalog import catalog_member
from ..families.cubic import CubicFourfold
from ..mpoly.polynomial import MultiPoly
from ..utils.config import get_default_threads, get_enumeration_budget
from ..utils.errors import ensure_within_budget
from .errors import BadPrimeError

SMOOTH = 'smooth'
SINGULAR_POINT_FOUND = 'singular-point-found'
INCONCLUSIVE = 'inconclusive'

DEFAULT_REGENERATION_ATTEMPTS = 8

IntegerTerms = List[Tuple[Tuple[int, ...], int]]


class SmoothnessCertificate(BaseModel):
    """Outcome of scanning every point of P^N(F_p) for a common zero of the partial derivatives"""
    cubic_name: str
    form_hash: str
    prime: int
    specialization: str
    verdict: str
    singular_point: Optional[List[int]] = None
    points_scanned: int
    wall_time: Optional[float] = None
    seed: Optional[int] = None
    note: str = ''

    class Config:
        allow_mutation = False

    @property
    def is_smooth(self) -> bool:
        return self.verdict == SMOOTH

    def summary(self, include_timing: bool = False) -> Dict:
        exclude = set() if include_timing else {'wall_time'}
        return self.dict(exclude=exclude, exclude_none=True)


def specialize_form(form: MultiPoly, s: SpecializationMap) -> IntegerTerms:
    """Coefficients of the form mapped to F_p, zero terms dropped"""
    terms = []
    try:
        for monomial, coefficient in form.sorted_terms():
            value = specialize_to_int(coefficient, s)
            if value:
                terms.append((tuple(monomial), value))
    except SpecializationError as exp:
        raise BadPrimeError(str(exp))
    return terms


def partials_mod_p(terms: IntegerTerms, variable_count: int, p: int) -> List[IntegerTerms]:
    partials = []
    for index in range(variable_count):
        derivative = []
        for exponents, c in terms:
            e = exponents[index]
            if e and (c * e) % p:
                lowered = list(exponents)
                lowered[index] -= 1
                derivative.append((tuple(lowered), c * e % p))
        partials.append(derivative)
    return partials


def evaluate_mod_p(terms: IntegerTerms, point: Sequence[int], p: int) -> int:
    total = 0
    for exponents, c in terms:
        value = c
        for x, e in zip(point, exponents):
            if e:
                value = value * pow(x, e, p) % p
        total += value
    return total % p


def _restrict_terms(terms: IntegerTerms, prefix: Sequence[int], p: int) -> List[Tuple[int, Tuple]]:
    """Substitutes the fixed leading coordinates; factors are (free index, exponent) pairs"""
    fixed = len(prefix)
    reduced: Dict[Tuple[int, ...], int] = {}
    for exponents, c in terms:
        value = c
        for x, e in zip(prefix, exponents[:fixed]):
            if e:
                value = value * pow(x, e, p) % p
        if value:
            rest = exponents[fixed:]
            reduced[rest] = (reduced.get(rest, 0) + value) % p
    return [(c, tuple((i, e) for i, e in enumerate(rest) if e)) for rest, c in reduced.items() if c]


def _vanishes(compiled: List[Tuple[int, Tuple]], point: Tuple[int, ...], p: int) -> bool:
    total = 0
    for c, factors in compiled:
        term = c
        for i, e in factors:
            term *= point[i] ** e
        total += term
    return total % p == 0


def _scan_chart(task: Tuple) -> Tuple[int, Optional[List[int]]]:
    """
    Scans the points with x_0 = .. = x_{chart-1} = 0, x_chart = 1 and, when given, x_{chart+1} = lead.
    Returns the number of points scanned and the first common zero of the partials
    """
    partials, p, count, chart, lead = task
    prefix = [0] * chart + [1] + ([lead] if lead is not None else [])
    compiled = [_restrict_terms(terms, prefix, p) for terms in partials]
    # partials with no term left vanish everywhere on the chart
    compiled = [c for c in compiled if c]

    scanned = 0
    for point in product(range(p), repeat=count - len(prefix)):
        scanned += 1
        if all(_vanishes(c, point, p) for c in compiled):
            return scanned, prefix + list(point)
    return scanned, None


def _chart_tasks(partials: List[IntegerTerms], p: int, count: int) -> Iterator[Tuple]:
    for chart in range(count):
        if chart < count - 1:
            for lead in range(p):
                yield partials, p, count, chart, lead
        else:
            yield partials, p, count, chart, None


def projective_point_count(p: int, variable_count: int) -> int:
    return (p ** variable_count - 1) // (p - 1)


def find_singular_point(terms: IntegerTerms, variable_count: int, p: int,
                        threads: int = 1) -> Tuple[int, Optional[List[int]]]:
    """Chart-by-chart scan of P^(count-1)(F_p); workers own disjoint chart ranges and results merge in task order"""
    partials = partials_mod_p(terms, variable_count, p)
    tasks = list(_chart_tasks(partials, p, variable_count))
    scanned = 0

    if threads <= 1:
        for task in tasks:
            count, point = _scan_chart(task)
            scanned += count
            if point is not None:
                return scanned, point
        return scanned, None

    with Pool(processes=min(threads, len(tasks))) as pool:
        for count, point in pool.imap(_scan_chart, tasks):
            scanned += count
            if point is not None:
                return scanned, point
    return scanned, None


def certify_smooth(cubic: CubicFourfold, s: SpecializationMap, threads: Optional[int] = None,
                   budget: Optional[int] = None, seed: Optional[int] = None) -> SmoothnessCertificate:
    """
    Specializes the reduced model to F_p and looks for a common zero of all partials on P^N(F_p).
    Since p != 3, Euler's identity puts such a zero on the hypersurface. A smooth verdict over F_p
    certifies smoothness in characteristic 0 for the coefficient embedding behind s
    """
    p = s.prime
    if p == 3:
        raise BadPrimeError('p = 3 divides the degree of the cubic')

    threads = threads or get_default_threads()
    budget = budget if budget is not None else get_enumeration_budget()
    count = cubic.variable_count
    total = projective_point_count(p, count)
    ensure_within_budget(f'smoothness scan of {cubic.name} mod {p}', total, budget)

    terms = specialize_form(cubic.reduced_form, s)
    fields = dict(cubic_name=cubic.name, form_hash=cubic.form_hash(), prime=p, specialization=s.summary(), seed=seed)
    if not terms:
        return SmoothnessCertificate(verdict=INCONCLUSIVE, points_scanned=0,
                                     note=f'the form vanishes identically mod {p}', **fields)

    logging.info(f'scanning {total} points of P^{count - 1}(F_{p}) for {cubic.name} with {threads} workers')
    start = time.perf_counter()
    scanned, point = find_singular_point(terms, count, p, threads)
    wall_time = round(time.perf_counter() - start, 3)
    logging.info(f'scan of {cubic.name} mod {p} finished after {scanned} points')

    if point is None:
        return SmoothnessCertificate(verdict=SMOOTH, points_scanned=scanned, wall_time=wall_time, **fields)

    partials = partials_mod_p(terms, count, p)
    if any(evaluate_mod_p(partial, point, p) for partial in partials):
        return SmoothnessCertificate(verdict=INCONCLUSIVE, points_scanned=scanned, wall_time=wall_time,
                                     note=f'reported point {point} did not re-verify', **fields)

    return SmoothnessCertificate(verdict=SINGULAR_POINT_FOUND, singular_point=point, points_scanned=scanned,
                                 wall_time=wall_time, **fields)


def specialization_for(cubic: CubicFourfold, prime: Optional[int] = None, p_min: int = 5) -> SpecializationMap:
    """The given prime, or the smallest usable one from p_min, for the cubic's coefficient field"""
    order = cubic.field_order
    try:
        if prime is not None:
            return find_specialization(order, p_min=prime, p_max=prime)
        return find_specialization(order, p_min=p_min)
    except SpecializationError as exp:
        raise BadPrimeError(str(exp))


def certify_generic_member(name: str, seed: int = 0, prime: Optional[int] = None, threads: Optional[int] = None,
                           max_attempts: int = DEFAULT_REGENERATION_ATTEMPTS,
                           budget: Optional[int] = None) -> SmoothnessCertificate:
    """Certifies the seeded member of a catalog family, moving on to seed+1, seed+2, .. until one is smooth"""
    certificate = None
    for attempt in range(max_attempts):
        cubic, _ = catalog_member(name, seed + attempt)
        s = specialization_for(cubic, prime)
        certificate = certify_smooth(cubic, s, threads=threads, budget=budget, seed=seed + attempt)
        if certificate.is_smooth:
            return certificate
        logging.warning(f'{name} member with seed {seed + attempt} is not certified smooth mod {s.prime}')
    return certificate
