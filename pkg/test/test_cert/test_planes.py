"""Module containing tests for planes and the pattern-plane search"""
from unittest import TestCase, main

from cubicfold.cert.errors import DegeneratePlaneError
from cubicfold.cert.planes import PlaneInP5, contains_plane, describe_pattern, find_disjoint_pair, \
    planes_disjoint, search_pattern_planes
from cubicfold.families.cubic import CubicFourfold
from cubicfold.mpoly.parser import default_variable_names, parse_poly
from cubicfold.utils.errors import BudgetExceededError

_FERMAT = CubicFourfold('Fermat', parse_poly(' + '.join(f'x{i}^3' for i in range(6)), default_variable_names(6)))


def _unit(i):
    return [int(i == j) for j in range(6)]


class TestPlaneInP5(TestCase):
    """Tests for PlaneInP5"""

    def test_equality_ignores_basis(self):
        """
        should compare planes through their reduced echelon form
        """
        first = PlaneInP5([_unit(0), _unit(1), _unit(2)])
        second = PlaneInP5([[1, 1, 0, 0, 0, 0], [0, 1, 1, 0, 0, 0], [0, 0, 2, 0, 0, 0]])
        self.assertEqual(first, second)
        self.assertEqual(len({first, second}), 1)

    def test_degenerate(self):
        """
        should refuse bases of rank below 3
        """
        with self.assertRaises(DegeneratePlaneError):
            PlaneInP5([_unit(0), _unit(1), [1, 1, 0, 0, 0, 0]])

    def test_disjoint(self):
        """
        should detect planes sharing no point
        """
        first = PlaneInP5([_unit(0), _unit(1), _unit(2)])
        self.assertTrue(planes_disjoint(first, PlaneInP5([_unit(3), _unit(4), _unit(5)])))
        self.assertFalse(planes_disjoint(first, PlaneInP5([_unit(2), _unit(3), _unit(4)])))

    def test_contains(self):
        """
        should test containment by restriction
        """
        plane = PlaneInP5([[1, -1, 0, 0, 0, 0], [0, 0, 1, -1, 0, 0], [0, 0, 0, 0, 1, -1]])
        self.assertTrue(contains_plane(_FERMAT, plane))
        self.assertFalse(contains_plane(_FERMAT, PlaneInP5([_unit(0), _unit(1), _unit(2)])))


class TestPatternSearch(TestCase):
    """Tests for search_pattern_planes"""

    def test_fermat_real_planes(self):
        """
        should find the 15 planes x_i = -x_j, none of them disjoint
        """
        planes = search_pattern_planes(_FERMAT, 2)
        self.assertEqual(len(planes), 15)
        self.assertIsNone(find_disjoint_pair(planes))

    def test_fermat_planes(self):
        """
        should find the 405 planes of the Fermat cubic with cube roots of unity
        """
        planes = search_pattern_planes(_FERMAT, 3)
        self.assertEqual(len(planes), 405)
        pair = find_disjoint_pair(planes)
        self.assertIsNotNone(pair)
        self.assertTrue(planes_disjoint(*pair))

    def test_budget(self):
        """
        should refuse searches beyond the budget
        """
        with self.assertRaises(BudgetExceededError):
            search_pattern_planes(_FERMAT, 3, budget=10)

    def test_describe(self):
        """
        should write the defining forms
        """
        self.assertEqual(describe_pattern([('pair', 0, 1, 0), ('pair', 2, 3, 2), ('zero', 4)], 3),
                         'x0 + x1 = x2 + zeta(3)^2*x3 = x4 = 0')


if __name__ == '__main__':
    main()
