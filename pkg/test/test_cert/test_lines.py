"""Module containing tests for ruled-line conditions and line counts on cubic surfaces"""
from fractions import Fraction
from unittest import TestCase, main

from cubicfold.cert.errors import LineNotContainedError, SingularSpecializationError
from cubicfold.cert.lines import _rref_lines, count_lines_on_cubic_surface, find_split_prime, line_count_p3, \
    ruled_lines_between
from cubicfold.exactnum.specialization import find_specialization
from cubicfold.families.cubic import CubicFourfold
from cubicfold.mpoly.parser import default_variable_names, parse_poly

_SURFACE = parse_poly('x0^3 + x1^3 + x2^3 + x3^3', default_variable_names(4))
_FERMAT = CubicFourfold('Fermat', parse_poly(' + '.join(f'x{i}^3' for i in range(6)), default_variable_names(6)))


def _vector(*entries):
    return [Fraction(e) for e in entries]


class TestLineCounts(TestCase):
    """Tests for count_lines_on_cubic_surface and find_split_prime"""

    def test_lines_of_p3(self):
        """
        should enumerate every line of P^3(F_p) once
        """
        self.assertEqual(len(list(_rref_lines(5))), line_count_p3(5))
        self.assertEqual(line_count_p3(7), 2850)

    def test_fermat_surface(self):
        """
        should find 27 lines when p = 1 mod 3 and 3 lines otherwise
        """
        self.assertEqual(count_lines_on_cubic_surface(_SURFACE, find_specialization(1, p_min=7)), 27)
        self.assertEqual(count_lines_on_cubic_surface(_SURFACE, find_specialization(1, p_min=5)), 3)

    def test_split_prime(self):
        """
        should stop at the first prime splitting all 27 lines
        """
        s, count = find_split_prime(_SURFACE)
        self.assertEqual((s.prime, count), (7, 27))

    def test_singular_surface(self):
        """
        should refuse singular reductions
        """
        cone = parse_poly('x1^3 + x2^3 + x3^3', default_variable_names(4))
        with self.assertRaises(SingularSpecializationError):
            count_lines_on_cubic_surface(cone, find_specialization(1, p_min=7))
        with self.assertRaises(ValueError):
            count_lines_on_cubic_surface(parse_poly('x0^3 + x1^3', ['x0', 'x1']), find_specialization(1, p_min=7))


class TestRuledLines(TestCase):
    """Tests for ruled_lines_between"""

    def test_lines_in_a_plane(self):
        """
        should vanish identically for two lines of a contained plane
        """
        first = [_vector(1, -1, 0, 0, 0, 0), _vector(0, 0, 1, -1, 0, 0)]
        second = [_vector(0, 0, 0, 0, 1, -1), _vector(0, 0, 1, -1, 0, 0)]
        self.assertTrue(ruled_lines_between(_FERMAT, first, second).both_vanish())

    def test_general_lines(self):
        """
        should return (a0^2 - a1^2)(b0 + b1) up to the factor 3
        """
        first = [_vector(1, -1, 0, 0, 0, 0), _vector(0, 0, 1, -1, 0, 0)]
        second = [_vector(1, 0, -1, 0, 0, 0), _vector(0, 1, 0, -1, 0, 0)]
        conditions = ruled_lines_between(_FERMAT, first, second)
        expected = parse_poly('3*(a0^2 - a1^2)*(b0 + b1)', ['a0', 'a1', 'b0', 'b1'])
        self.assertEqual(conditions.u2v, expected)
        self.assertFalse(conditions.both_vanish())

    def test_line_not_contained(self):
        """
        should refuse lines outside the cubic
        """
        first = [_vector(1, 0, 0, 0, 0, 0), _vector(0, 1, 0, 0, 0, 0)]
        second = [_vector(0, 0, 0, 0, 1, -1), _vector(0, 0, 1, -1, 0, 0)]
        with self.assertRaises(LineNotContainedError):
            ruled_lines_between(_FERMAT, first, second)


if __name__ == '__main__':
    main()
