"""Module containing tests for sparse multivariate polynomials"""
import random
from fractions import Fraction
from unittest import TestCase, main

from cubicfold.mpoly.errors import DimensionMismatchError
from cubicfold.mpoly.monomial import Monomial, cubic_monomials, monomials_of_degree
from cubicfold.mpoly.parser import default_variable_names, parse_poly
from cubicfold.mpoly.polynomial import MultiPoly, partial_derivatives, substitute_linear
from cubicfold.utils.linalg import mat_mul

_THREE = default_variable_names(3)


def _random_cubic(rng: random.Random, count: int = 3) -> MultiPoly:
    return MultiPoly(count, {m: Fraction(rng.randint(-3, 3)) for m in cubic_monomials(count)})


def _random_matrix(rng: random.Random, size: int = 3):
    return [[Fraction(rng.randint(-2, 2)) for _ in range(size)] for _ in range(size)]


class TestMonomials(TestCase):
    """Tests for exponent-vector monomials"""

    def test_cubic_monomials(self):
        """
        should list the 56 cubic monomials in six variables
        """
        monomials = cubic_monomials()
        self.assertEqual(len(monomials), 56)
        self.assertEqual(len(set(monomials)), 56)
        self.assertTrue(all(m.degree == 3 for m in monomials))

    def test_grevlex_order(self):
        """
        should order monomials in descending graded reverse lexicographic order
        """
        expected = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
        self.assertEqual(monomials_of_degree(2, 3), expected)

    def test_monomial_helpers(self):
        """
        should permute variables, sum weights and print the monomial
        """
        monomial = Monomial.from_variables(4, [0, 0, 3])
        self.assertEqual(monomial, (2, 0, 0, 1))
        self.assertEqual(monomial.variables(), [0, 0, 3])
        self.assertEqual(monomial.permuted((1, 2, 3, 0)), (1, 2, 0, 0))
        self.assertEqual(monomial.weight((1, 0, 0, 2), 3), 1)
        self.assertEqual(monomial.to_expression(['a', 'b', 'c', 'd']), 'a^2*d')

        with self.assertRaises(ValueError):
            Monomial((1, -1))


class TestMultiPoly(TestCase):
    """Tests for MultiPoly arithmetic"""

    def test_arithmetic(self):
        """
        should add, multiply and cancel terms exactly
        """
        x, y = MultiPoly.variable(2, 0, Fraction(1)), MultiPoly.variable(2, 1, Fraction(1))
        square = (x + y) ** 2
        self.assertEqual(square.coefficient((1, 1)), 2)
        self.assertEqual(len(square), 3)
        self.assertTrue((square - x * x - 2 * x * y - y * y).is_zero())
        self.assertEqual(square.degree(), 2)
        self.assertTrue(square.is_homogeneous(2))
        self.assertFalse((square + 1).is_homogeneous())

    def test_dimension_mismatch(self):
        """
        should refuse monomials and operands of the wrong size
        """
        with self.assertRaises(DimensionMismatchError):
            MultiPoly(2, {(1, 0, 0): 1})
        with self.assertRaises(DimensionMismatchError):
            MultiPoly.variable(2, 0) + MultiPoly.variable(3, 0)
        with self.assertRaises(DimensionMismatchError):
            MultiPoly.variable(2, 0).evaluate([1, 2, 3])

    def test_evaluate(self):
        """
        should evaluate exactly at rational points
        """
        form = parse_poly('x0^3 + x1^3 + x2^3 - 3*x0*x1*x2', _THREE)
        self.assertEqual(form.evaluate([1, 1, 1]), 0)
        self.assertEqual(form.evaluate([Fraction(1, 2), 0, 0]), Fraction(1, 8))

    def test_proportional(self):
        """
        should detect nonzero scalar multiples only
        """
        form = parse_poly('x0^2*x1 + 2*x2^3', _THREE)
        self.assertTrue(form.scale(Fraction(-3, 2)).is_proportional_to(form))
        self.assertFalse((form + parse_poly('x0^3', _THREE)).is_proportional_to(form))
        self.assertFalse(MultiPoly.zero(3).is_proportional_to(form))

    def test_euler_identity(self):
        """
        should satisfy sum x_i dF/dx_i = 3F on 1000 random cubics
        """
        rng = random.Random(3)
        variables = [MultiPoly.variable(3, i, Fraction(1)) for i in range(3)]
        for _ in range(1000):
            form = _random_cubic(rng)
            total = MultiPoly.zero(3)
            for variable, partial in zip(variables, partial_derivatives(form)):
                total = total + variable * partial
            self.assertEqual(total, form.scale(3))

    def test_substitution_composes(self):
        """
        should satisfy F((M1 M2) x) = (F o M1)(M2 x) on 1000 random cubics and matrices
        """
        rng = random.Random(5)
        for _ in range(1000):
            form = _random_cubic(rng)
            first, second = _random_matrix(rng), _random_matrix(rng)
            self.assertEqual(substitute_linear(form, mat_mul(first, second)),
                             substitute_linear(substitute_linear(form, first), second))

    def test_substitution_needs_square_matrix(self):
        """
        should refuse matrices of the wrong size
        """
        with self.assertRaises(DimensionMismatchError):
            substitute_linear(parse_poly('x0^3', _THREE), [[1, 0], [0, 1]])

    def test_coefficient_order(self):
        """
        should report the smallest cyclotomic field containing the coefficients
        """
        form = parse_poly('zeta(3)*x0^3 + i*x1^3', _THREE)
        self.assertEqual(form.coefficient_order(), 12)
        self.assertEqual(parse_poly('x0^3', _THREE).coefficient_order(), 1)


if __name__ == '__main__':
    main()
