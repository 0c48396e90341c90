"""Module containing the search for monomial symmetries of a form"""
import logging
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Any, List, Optional

from ..exactnum.cyclotomic import CyclotomicNumber
from ..mpoly.polynomial import MultiPoly
from ..utils.config import get_enumeration_budget
from ..utils.errors import BudgetExceededError, ensure_within_budget
from .automorphism import ProjectiveAutomorphism, order_in_pgl
from .errors import SymmetryNotFoundError
from .weights import iter_weight_solutions

MAX_SEARCH_VARIABLES = 8


def _root_exponent(value: Any, modulus: int) -> Optional[int]:
    """k with value == zeta_modulus^k, else None"""
    if not isinstance(value, CyclotomicNumber):
        value = CyclotomicNumber.from_rational(Fraction(value))
    return value.discrete_log(modulus)


def monomial_symmetries(form: MultiPoly, modulus: int, budget: Optional[int] = None) -> List[ProjectiveAutomorphism]:
    """
    Every projective automorphism pi . diag(zeta_n^w) with F o M = lambda F, normalized to w_0 = 0.
    For each permutation preserving the support, coefficient ratios fix the offsets of the
    induced weight system
    """
    count = form.variable_count
    budget = get_enumeration_budget() if budget is None else budget
    if count > MAX_SEARCH_VARIABLES:
        raise BudgetExceededError(what='monomial symmetry search', required=factorial(count),
                                  budget=factorial(MAX_SEARCH_VARIABLES))
    ensure_within_budget('monomial symmetry search', factorial(count) * modulus, budget)

    terms = form.terms
    support = set(terms)
    ordered = form.support()
    logging.info(f'searching monomial symmetries over {factorial(count)} permutations, n={modulus}')

    found: List[ProjectiveAutomorphism] = []
    for permutation in permutations(range(count)):
        images = [m.permuted(permutation) for m in ordered]
        if set(images) != support:
            continue

        ratios = [terms[image] / terms[m] for m, image in zip(ordered, images)]
        constraints = []
        for image, ratio in zip(images, ratios):
            offset = _root_exponent(ratio / ratios[0], modulus)
            if offset is None:
                break
            constraints.append((image, offset))
        else:
            for weights, _ in iter_weight_solutions(constraints, modulus, count):
                found.append(ProjectiveAutomorphism.monomial(permutation, modulus, weights, provenance='derived'))
                ensure_within_budget('monomial symmetry search', len(found), budget)

    logging.info(f'found {len(found)} monomial symmetries')
    return found


def permutation_symmetry(form: MultiPoly, modulus: int, order: int,
                         budget: Optional[int] = None) -> ProjectiveAutomorphism:
    """
    The coordinate permutation of the given projective order preserving F up to scalar,
    taken from monomial_symmetries; the one with the smallest image tuple wins
    """
    candidates = [symmetry for symmetry in monomial_symmetries(form, modulus, budget)
                  if not any(symmetry.structure.weights) and order_in_pgl(symmetry) == order]
    if not candidates:
        raise SymmetryNotFoundError(f'no coordinate permutation of order {order} preserves the form')
    return min(candidates, key=lambda symmetry: symmetry.structure.permutation)
