"""Module containing tests for projective automorphisms"""
import random
from fractions import Fraction
from unittest import TestCase, main

from cubicfold.autgrp.automorphism import ProjectiveAutomorphism, order_in_pgl
from cubicfold.autgrp.errors import NonInvertibleAutomorphismError, OrderCapExceededError
from cubicfold.exactnum.cyclotomic import root_of_unity
from cubicfold.utils.linalg import mat_mul


def _random_monomial(rng: random.Random, size: int = 4, order: int = 6) -> ProjectiveAutomorphism:
    permutation = list(range(size))
    rng.shuffle(permutation)
    return ProjectiveAutomorphism.monomial(permutation, order, [rng.randrange(order) for _ in range(size)])


class TestProjectiveAutomorphism(TestCase):
    """Tests for ProjectiveAutomorphism"""

    def test_orders(self):
        """
        should find the least power that is a scalar matrix
        """
        self.assertEqual(order_in_pgl(ProjectiveAutomorphism.diagonal(3, (0, 0, 1, 1, 2, 2))), 3)
        self.assertEqual(order_in_pgl(ProjectiveAutomorphism.diagonal(3, (1, 1, 1, 1, 1, 1))), 1)
        self.assertEqual(order_in_pgl(ProjectiveAutomorphism.permutation((1, 2, 0, 4, 3, 5))), 6)
        self.assertEqual(order_in_pgl(ProjectiveAutomorphism.diagonal(12, (0, 3, 4, 0, 3, 4))), 12)

    def test_order_cap(self):
        """
        should give up when no power up to the cap is scalar
        """
        with self.assertRaises(OrderCapExceededError):
            order_in_pgl(ProjectiveAutomorphism.diagonal(7, (0, 1, 0)), cap=3)

    def test_monomial_product_matches_matrices(self):
        """
        should multiply monomial structures like their matrices on 200 random pairs
        """
        rng = random.Random(11)
        for _ in range(200):
            first, second = _random_monomial(rng), _random_monomial(rng)
            expected = ProjectiveAutomorphism(mat_mul(first.matrix, second.matrix))
            self.assertEqual((first * second).generic_key(), expected.generic_key())
            self.assertTrue((first * first.inverse()).is_scalar())

    def test_determinant(self):
        """
        should multiply the weights and the sign of the permutation
        """
        self.assertEqual(ProjectiveAutomorphism.diagonal(3, (1, 2, 0, 0, 0, 0)).determinant(), 1)
        self.assertEqual(ProjectiveAutomorphism.diagonal(3, (1, 0, 0, 0, 0, 0)).determinant(), root_of_unity(3))
        self.assertEqual(ProjectiveAutomorphism.permutation((1, 0, 2, 3, 4, 5)).determinant(), -1)

    def test_projective_equality(self):
        """
        should identify matrices that differ by a scalar
        """
        rotation = ProjectiveAutomorphism.diagonal(5, (1, 2, 3))
        shifted = ProjectiveAutomorphism.diagonal(5, (0, 1, 2))
        self.assertTrue(rotation.projectively_equal(shifted))
        self.assertTrue(rotation.projectively_equal(rotation.scaled(Fraction(3))))
        self.assertFalse(rotation.projectively_equal(ProjectiveAutomorphism.diagonal(5, (0, 2, 1))))

    def test_apply(self):
        """
        should act on points as the substitution x_i -> x_images[i]
        """
        cycle = ProjectiveAutomorphism.permutation((1, 2, 0))
        self.assertEqual(cycle.apply([1, 2, 3]), [2, 3, 1])

    def test_singular_matrix(self):
        """
        should refuse singular matrices and non-permutations
        """
        with self.assertRaises(NonInvertibleAutomorphismError):
            ProjectiveAutomorphism([[1, 2], [2, 4]])
        with self.assertRaises(NonInvertibleAutomorphismError):
            ProjectiveAutomorphism.monomial((0, 0, 1), 3, (0, 0, 0))


if __name__ == '__main__':
    main()
