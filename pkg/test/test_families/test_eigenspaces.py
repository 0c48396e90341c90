"""Module containing tests for invariant spaces, centralizers and eigen-decompositions"""
from fractions import Fraction
from unittest import TestCase, main

from cubicfold.autgrp.automorphism import ProjectiveAutomorphism
from cubicfold.exactnum.cyclotomic import root_of_unity
from cubicfold.families.eigenspaces import centralizer_dimension, eigenvalue_multiplicities, family_dimension, \
    fixed_locus_p5, invariant_cubic_space
from cubicfold.families.errors import EmptyFamilyError
from cubicfold.mpoly.parser import parse_poly

_SWAP = ProjectiveAutomorphism.permutation((1, 0))


class TestInvariantCubicSpace(TestCase):
    """Tests for invariant_cubic_space"""

    def test_diagonal(self):
        """
        should keep exactly the monomials of weight c
        """
        space = invariant_cubic_space(ProjectiveAutomorphism.diagonal(3, (0, 0, 0, 1, 1, 1)))
        self.assertEqual(space.dimension, 20)
        self.assertTrue(space.is_monomial())

    def test_permutation_eigenspaces(self):
        """
        should split binary cubics into symmetric and antisymmetric parts
        """
        symmetric = invariant_cubic_space(_SWAP, 1)
        antisymmetric = invariant_cubic_space(_SWAP, Fraction(-1))
        self.assertEqual(symmetric.dimension, 2)
        self.assertEqual(antisymmetric.dimension, 2)
        self.assertFalse(symmetric.is_monomial())

        names = ['x0', 'x1']
        self.assertTrue(symmetric.contains(parse_poly('x0^3 + x1^3 + 5*x0^2*x1 + 5*x0*x1^2', names)))
        self.assertFalse(symmetric.contains(parse_poly('x0^3', names)))
        self.assertTrue(antisymmetric.contains(parse_poly('x0^3 - x1^3', names)))

    def test_empty_family(self):
        """
        should refuse a scalar with no semi-invariant cubic
        """
        with self.assertRaises(EmptyFamilyError):
            family_dimension(ProjectiveAutomorphism.diagonal(3, (0, 0, 0, 0, 0, 0)), root_of_unity(3))


class TestCentralizer(TestCase):
    """Tests for centralizer_dimension"""

    def test_diagonal(self):
        """
        should sum the squared multiplicities minus one
        """
        self.assertEqual(centralizer_dimension(ProjectiveAutomorphism.diagonal(3, (0, 0, 1, 1, 2, 2))), 11)
        self.assertEqual(centralizer_dimension(ProjectiveAutomorphism.diagonal(11, (0, 1, 10, 3, 6, 4))), 5)

    def test_permutation(self):
        """
        should solve the commutator equations of a general matrix
        """
        self.assertEqual(centralizer_dimension(_SWAP), 1)


class TestFixedLocusP5(TestCase):
    """Tests for fixed_locus_p5"""

    def test_diagonal(self):
        """
        should return one coordinate subspace per weight
        """
        components = fixed_locus_p5(ProjectiveAutomorphism.diagonal(3, (0, 0, 1, 1, 2, 2)))
        self.assertEqual([len(basis) for _, basis in components], [2, 2, 2])
        self.assertEqual(components[1][0], root_of_unity(3))

    def test_transposition(self):
        """
        should find the eigenvalues 1 and -1 of a transposition
        """
        transposition = ProjectiveAutomorphism.permutation((1, 0, 2, 3, 4, 5))
        self.assertEqual(eigenvalue_multiplicities(transposition), (5, 1))


if __name__ == '__main__':
    main()
