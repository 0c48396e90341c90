"""Module containing tests for linear sections and restriction of forms"""
import random
from fractions import Fraction
from unittest import TestCase, main

from cubicfold.mpoly.errors import DimensionMismatchError
from cubicfold.mpoly.linear_section import LinearSection, restrict_to_linear_section
from cubicfold.mpoly.monomial import cubic_monomials
from cubicfold.mpoly.parser import default_variable_names, parse_poly
from cubicfold.mpoly.polynomial import MultiPoly, evaluate

_EIGHT = default_variable_names(8)
_SIX = default_variable_names(6)


def _two_hyperplanes() -> LinearSection:
    forms = [parse_poly('x0 + x1 + x2', _EIGHT), parse_poly('x3 + x4 + x5 + x6 + x7', _EIGHT)]
    return LinearSection.from_forms(forms, eliminate=[0, 7])


class TestRestrictToLinearSection(TestCase):
    """Tests for restrict_to_linear_section"""

    def test_two_hyperplanes_in_p7(self):
        """
        should turn the Fermat cubic in eight variables into two blocks in the kept variables
        """
        fermat = parse_poly(' + '.join(f'x{i}^3' for i in range(8)), _EIGHT)
        restricted = restrict_to_linear_section(fermat, _two_hyperplanes())
        expected = parse_poly('(-x0 - x1)^3 + x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3 + (-x2 - x3 - x4 - x5)^3', _SIX)
        self.assertEqual(restricted, expected)

        block = parse_poly('(-x0 - x1)^3 + x0^3 + x1^3', _SIX)
        self.assertTrue(all(restricted.coefficient(m) == c for m, c in block.terms.items()))

    def test_sum_zero_hyperplane(self):
        """
        should give a cubic in six variables on the hyperplane where the seven coordinates sum to zero
        """
        names = default_variable_names(7)
        section = LinearSection.from_forms([parse_poly(' + '.join(names), names)], eliminate=[6])
        restricted = restrict_to_linear_section(parse_poly(' + '.join(f'{n}^3' for n in names), names), section)
        self.assertEqual(restricted.variable_count, 6)
        self.assertTrue(restricted.is_homogeneous(3))
        self.assertEqual(restricted.coefficient((3, 0, 0, 0, 0, 0)), 0)
        self.assertEqual(restricted.coefficient((2, 1, 0, 0, 0, 0)), -3)

    def test_vanishing_restriction(self):
        """
        should give zero for x4^3 on the hyperplane x4 = 0
        """
        section = LinearSection.from_forms([parse_poly('x4', _SIX)], eliminate=[4])
        self.assertTrue(restrict_to_linear_section(parse_poly('x4^3', _SIX), section).is_zero())
        self.assertFalse(restrict_to_linear_section(parse_poly('x3^3', _SIX), section).is_zero())

    def test_agrees_with_evaluation(self):
        """
        should evaluate like the form at the parametrized point, on 1000 random cubics and parameters
        """
        rng = random.Random(15)
        section = _two_hyperplanes()
        monomials = cubic_monomials(8)
        for _ in range(1000):
            form = MultiPoly(8, {m: Fraction(rng.randint(-3, 3)) for m in rng.sample(monomials, 12)})
            t = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(section.dimension)]
            restricted = restrict_to_linear_section(form, section)
            self.assertEqual(evaluate(restricted, t), evaluate(form, section.parametrize(t)))

    def test_dimension_mismatch(self):
        """
        should refuse forms whose variable count differs from the ambient space
        """
        with self.assertRaises(DimensionMismatchError):
            restrict_to_linear_section(parse_poly('x0^3', _SIX), _two_hyperplanes())


class TestLinearSection(TestCase):
    """Tests for LinearSection"""

    def test_reduced_coordinates(self):
        """
        should read reduced coordinates off the kept variables and refuse points off the section
        """
        section = _two_hyperplanes()
        point = section.parametrize([1, 2, 3, 4, 5, 6])
        self.assertEqual(point, [-3, 1, 2, 3, 4, 5, 6, -18])
        self.assertEqual(section.coordinates_of(point), [1, 2, 3, 4, 5, 6])

        with self.assertRaises(DimensionMismatchError):
            section.coordinates_of([1, 0, 0, 0, 0, 0, 0, 0])

    def test_basis_length(self):
        """
        should refuse a basis of the wrong length
        """
        forms = [parse_poly('x0 + x1', ['x0', 'x1', 'x2'])]
        with self.assertRaises(DimensionMismatchError):
            LinearSection(3, forms, [[1, -1, 0]])


if __name__ == '__main__':
    main()
