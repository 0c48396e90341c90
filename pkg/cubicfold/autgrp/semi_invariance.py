"""Module containing the semi-invariance and symplecticity tests"""
from typing import Any, Optional

from ..exactnum.cyclotomic import CyclotomicNumber
from ..mpoly.polynomial import MultiPoly, substitute_linear
from .automorphism import ProjectiveAutomorphism
from .errors import NotSemiInvariantError


def transform_form(form: MultiPoly, automorphism: ProjectiveAutomorphism) -> MultiPoly:
    """F o M; monomial automorphisms move terms instead of expanding"""
    if automorphism.structure is None or automorphism.size != form.variable_count:
        return substitute_linear(form, automorphism.matrix)

    permutation, order, weights = automorphism.structure
    terms = {}
    for monomial, coefficient in form.terms.items():
        exponent = sum(e * weights[permutation[i]] for i, e in enumerate(monomial)) % order
        if exponent:
            coefficient = coefficient * CyclotomicNumber.zeta(order, exponent)
        terms[monomial.permuted(permutation)] = coefficient
    return MultiPoly(form.variable_count, terms)


def semi_invariance(form: MultiPoly, automorphism: ProjectiveAutomorphism) -> Optional[Any]:
    """lambda with F o M = lambda F, or None"""
    if form.is_zero():
        raise ValueError('semi-invariance of the zero form is undefined')

    image = transform_form(form, automorphism)
    monomial, coefficient = form.leading_term()
    ratio = image.coefficient(monomial) / coefficient

    if ratio == 0 or image != form.scale(ratio):
        return None

    if isinstance(ratio, CyclotomicNumber) and ratio.is_rational():
        return ratio.to_rational()
    return ratio


def is_symplectic(form: MultiPoly, automorphism: ProjectiveAutomorphism) -> bool:
    """
    det(M) == lambda^2 for a cubic in six variables: the generator of H^{3,1} is the residue
    of Omega / F^2 and Omega picks up det(M). The test is unchanged when M is rescaled
    """
    scalar = semi_invariance(form, automorphism)
    if scalar is None:
        raise NotSemiInvariantError(f'{automorphism!r} does not preserve the form up to a scalar')

    return automorphism.determinant() == scalar ** 2
