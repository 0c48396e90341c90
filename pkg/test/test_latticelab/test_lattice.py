"""Module containing tests for integer lattices"""
import random
from itertools import product
from unittest import TestCase, main

from cubicfold.latticelab.errors import IndefiniteLatticeError, NonSymmetricGramError
from cubicfold.latticelab.lattice import IntegerLattice, enumerate_norm_vectors, lattice_invariants
from cubicfold.latticelab.reference import V3_GRAM


def _random_positive_definite(rng: random.Random, rank: int) -> IntegerLattice:
    while True:
        gram = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            gram[i][i] = rng.randint(1, 6)
            for j in range(i + 1, rank):
                gram[i][j] = gram[j][i] = rng.randint(-6, 6)
        lattice = IntegerLattice(gram)
        if lattice.is_positive_definite():
            return lattice


class TestIntegerLattice(TestCase):
    """Tests for IntegerLattice"""

    def setUp(self) -> None:
        self.lattice = IntegerLattice(V3_GRAM)

    def test_invariants(self):
        """
        should compute rank, determinant and definiteness
        """
        self.assertEqual(tuple(lattice_invariants(self.lattice)), (3, 60, True))
        self.assertFalse(IntegerLattice([[1, 2], [2, 1]]).is_positive_definite())
        self.assertEqual(IntegerLattice([[1, 2], [2, 1]]).determinant(), -3)

    def test_bad_gram(self):
        """
        should refuse non-square and non-symmetric Gram matrices
        """
        with self.assertRaises(NonSymmetricGramError):
            IntegerLattice([[1, 0], [1, 1]])
        with self.assertRaises(NonSymmetricGramError):
            IntegerLattice([[1, 0, 0], [0, 1]])

    def test_norm(self):
        """
        should evaluate the quadratic form
        """
        self.assertEqual(self.lattice.norm((1, 1, 1)), 14)
        self.assertEqual(self.lattice.inner((1, 0, 0), (0, 1, 0)), 1)


class TestEnumerateNormVectors(TestCase):
    """Tests for enumerate_norm_vectors"""

    def setUp(self) -> None:
        self.lattice = IntegerLattice(V3_GRAM)

    def test_minimal_vectors(self):
        """
        should find the six vectors of norm 4
        """
        vectors = enumerate_norm_vectors(self.lattice, 4)
        self.assertEqual(vectors, [(-1, 0, 0), (0, -1, 0), (0, 0, -1), (0, 0, 1), (0, 1, 0), (1, 0, 0)])
        self.assertEqual(enumerate_norm_vectors(self.lattice, 4, bound=1), vectors)

    def test_norm_fourteen(self):
        """
        should find only vectors of the requested norm, including (1, 1, 1)
        """
        vectors = enumerate_norm_vectors(self.lattice, 14)
        self.assertIn((1, 1, 1), vectors)
        self.assertIn((-1, -1, -1), vectors)
        self.assertTrue(all(self.lattice.norm(v) == 14 for v in vectors))

    def test_odd_norm(self):
        """
        should find nothing for odd norms of an even lattice
        """
        self.assertEqual(enumerate_norm_vectors(self.lattice, 13), [])
        self.assertEqual(enumerate_norm_vectors(self.lattice, 0), [(0, 0, 0)])
        self.assertEqual(enumerate_norm_vectors(self.lattice, -2), [])

    def test_brute_force(self):
        """
        should agree with a brute-force scan of a small box
        """
        lattice = IntegerLattice([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
        box = range(-3, 4)
        for norm in range(0, 9):
            expected = sorted((a, b, c) for a in box for b in box for c in box if lattice.norm((a, b, c)) == norm)
            self.assertEqual(enumerate_norm_vectors(lattice, norm), expected)

    def test_indefinite(self):
        """
        should refuse indefinite lattices and bad bounds
        """
        with self.assertRaises(IndefiniteLatticeError):
            enumerate_norm_vectors(IntegerLattice([[1, 2], [2, 1]]), 4)
        with self.assertRaises(ValueError):
            enumerate_norm_vectors(self.lattice, 4, bound=0)

    def test_random_lattices(self):
        """
        should agree with a brute-force scan on 1000 random positive definite lattices of rank two and three
        """
        rng = random.Random(6)
        for case in range(1000):
            rank = 2 + case % 2
            lattice = _random_positive_definite(rng, rank)
            norm = rng.randint(0, 12)
            if rank == 2:
                box = range(-8, 9)
                expected = sorted(v for v in product(box, repeat=2) if lattice.norm(v) == norm)
                self.assertEqual(enumerate_norm_vectors(lattice, norm), expected)
            else:
                box = range(-3, 4)
                expected = sorted(v for v in product(box, repeat=3) if lattice.norm(v) == norm)
                self.assertEqual(enumerate_norm_vectors(lattice, norm, bound=3), expected)


if __name__ == '__main__':
    main()
