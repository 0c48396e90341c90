"""Module containing tests for the semi-invariance and symplecticity tests"""
import random
from fractions import Fraction
from unittest import TestCase, main

from cubicfold.autgrp.automorphism import ProjectiveAutomorphism
from cubicfold.autgrp.errors import NotSemiInvariantError
from cubicfold.autgrp.semi_invariance import is_symplectic, semi_invariance, transform_form
from cubicfold.exactnum.cyclotomic import root_of_unity
from cubicfold.mpoly.monomial import cubic_monomials
from cubicfold.mpoly.parser import default_variable_names, parse_poly
from cubicfold.mpoly.polynomial import MultiPoly, substitute_linear

_SIX = default_variable_names(6)
_FERMAT = parse_poly('x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3', _SIX)


def _character(monomial, weights, order) -> int:
    return sum(e * w for e, w in zip(monomial, weights)) % order


class TestSemiInvariance(TestCase):
    """Tests for transform_form, semi_invariance and is_symplectic"""

    def test_monomial_transform_matches_substitution(self):
        """
        should move terms exactly as the matrix substitution does
        """
        form = parse_poly('x0^2*x1 + 2*x2*x3*x4 - x5^3 + x0*x1*x5', _SIX)
        automorphism = ProjectiveAutomorphism.monomial((2, 0, 1, 5, 3, 4), 6, (1, 5, 0, 2, 3, 4))
        self.assertEqual(transform_form(form, automorphism), substitute_linear(form, automorphism.matrix))

    def test_symplectic_labels(self):
        """
        should compare det(M) with the square of the scalar
        """
        symplectic = ProjectiveAutomorphism.diagonal(3, (1, 2, 0, 0, 0, 0))
        non_symplectic = ProjectiveAutomorphism.diagonal(3, (1, 0, 0, 0, 0, 0))
        self.assertEqual(semi_invariance(_FERMAT, symplectic), 1)
        self.assertTrue(is_symplectic(_FERMAT, symplectic))
        self.assertFalse(is_symplectic(_FERMAT, non_symplectic))
        self.assertTrue(is_symplectic(_FERMAT, ProjectiveAutomorphism.permutation((1, 2, 0, 3, 4, 5))))
        self.assertFalse(is_symplectic(_FERMAT, ProjectiveAutomorphism.permutation((1, 0, 2, 3, 4, 5))))

    def test_scalar(self):
        """
        should return the cyclotomic scalar of a semi-invariant form
        """
        form = parse_poly('x0^2*x1 + x2^3', ['x0', 'x1', 'x2'])
        automorphism = ProjectiveAutomorphism.diagonal(3, (0, 0, 0))
        self.assertEqual(semi_invariance(form, automorphism), 1)

        scaled = ProjectiveAutomorphism.diagonal(9, (1, 1, 1))
        self.assertEqual(semi_invariance(form, scaled), root_of_unity(3))

    def test_not_semi_invariant(self):
        """
        should return None and refuse the symplectic test
        """
        form = parse_poly('x0^3 + x0*x1^2 + x2^3 + x3^3 + x4^3 + x5^3', _SIX)
        automorphism = ProjectiveAutomorphism.diagonal(3, (1, 0, 0, 0, 0, 0))
        self.assertIsNone(semi_invariance(form, automorphism))
        with self.assertRaises(NotSemiInvariantError):
            is_symplectic(form, automorphism)

    def test_zero_form(self):
        """
        should refuse the zero form
        """
        with self.assertRaises(ValueError):
            semi_invariance(MultiPoly.zero(6), ProjectiveAutomorphism.identity(6))

    def test_scaling_does_not_change_the_label(self):
        """
        should give the same answer for a rescaled matrix
        """
        automorphism = ProjectiveAutomorphism.diagonal(3, (1, 2, 0, 0, 0, 0))
        rescaled = automorphism.scaled(Fraction(2))
        self.assertTrue(is_symplectic(_FERMAT, rescaled))
        self.assertEqual(semi_invariance(_FERMAT, rescaled), 8)

    def test_random_rescalings(self):
        """
        should keep the label and multiply the scalar by c^3 when the matrix is multiplied by c, on 1000 cases
        """
        rng = random.Random(31)
        monomials = cubic_monomials(6)
        for case in range(1000):
            if case % 2:
                order = rng.choice((3, 6, 9, 12))
                shift = rng.randrange(order)
                weights = [shift + order // 3 * rng.randrange(3) for _ in range(6)]
                permutation = list(range(6))
                rng.shuffle(permutation)
                automorphism = ProjectiveAutomorphism.monomial(permutation, order, weights)
                form = _FERMAT
            else:
                order = rng.choice((3, 4, 5, 6, 7, 9, 12))
                automorphism = ProjectiveAutomorphism.diagonal(order, [rng.randrange(order) for _ in range(6)])
                character = _character(rng.choice(monomials), automorphism.structure.weights, order)
                matching = [m for m in monomials if _character(m, automorphism.structure.weights, order) == character]
                form = MultiPoly(6, {m: Fraction(rng.choice((-3, -2, -1, 1, 2, 3)))
                                     for m in rng.sample(matching, min(8, len(matching)))})

            factor = rng.choice((Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.randint(1, 3)),
                                 root_of_unity(rng.choice((3, 4)), rng.randint(1, 3)),
                                 1 + root_of_unity(3)))
            scalar = semi_invariance(form, automorphism)
            rescaled = automorphism.scaled(factor)
            self.assertIsNotNone(scalar)
            self.assertEqual(semi_invariance(form, rescaled), scalar * factor ** 3)
            self.assertEqual(rescaled.determinant(), automorphism.determinant() * factor ** 6)
            self.assertEqual(is_symplectic(form, rescaled), is_symplectic(form, automorphism))


if __name__ == '__main__':
    main()
