"""Module containing tests for fixed loci on cubic fourfolds"""
from unittest import TestCase, main

from cubicfold.autgrp.automorphism import ProjectiveAutomorphism
from cubicfold.autgrp.errors import NotSemiInvariantError
from cubicfold.exactnum.cyclotomic import root_of_unity
from cubicfold.families.catalog import family_generator, fermat_split_v2_member
from cubicfold.families.cubic import CubicFourfold
from cubicfold.families.fixed_locus import binary_cubic_points, binary_cubic_root_count, fixed_locus_on_x
from cubicfold.mpoly.parser import default_variable_names, parse_poly

_SIX = default_variable_names(6)
_FERMAT = CubicFourfold('Fermat', parse_poly(' + '.join(f'x{i}^3' for i in range(6)), _SIX))


class TestFixedLocus(TestCase):
    """Tests for fixed_locus_on_x"""

    def test_isolated_points(self):
        """
        should find three points with coordinates in Q(zeta_3) on each of the three eigenlines
        """
        generator = ProjectiveAutomorphism.diagonal(3, (0, 0, 1, 1, 2, 2))
        report = fixed_locus_on_x(_FERMAT, generator)
        self.assertTrue(report.is_finite())
        self.assertEqual(report.isolated_point_count(), 9)
        self.assertTrue(report.verify_points(_FERMAT.reduced_form, generator))
        self.assertTrue(all(len(component.points) == 3 for component in report.components))

    def test_curves(self):
        """
        should find two plane cubic curves for the V2 generator
        """
        report = fixed_locus_on_x(fermat_split_v2_member(), family_generator('V2'))
        self.assertEqual(report.shape(), {'isolated_points': 0, 'curves': 2, 'surfaces': 0, 'hypersurfaces': 0,
                                          'contained_subspaces': 0})
        self.assertFalse(report.is_finite())

    def test_not_semi_invariant(self):
        """
        should refuse automorphisms that do not preserve the cubic
        """
        with self.assertRaises(NotSemiInvariantError):
            fixed_locus_on_x(_FERMAT, ProjectiveAutomorphism.diagonal(4, (1, 0, 0, 0, 0, 0)))

    def test_binary_cubic_root_count(self):
        """
        should count distinct zeros on P^1
        """
        names = ['t0', 't1']
        self.assertEqual(binary_cubic_root_count(parse_poly('t0^3 + t1^3', names)), 3)
        self.assertEqual(binary_cubic_root_count(parse_poly('t0^2*t1', names)), 2)
        self.assertEqual(binary_cubic_root_count(parse_poly('t0^3', names)), 1)

    def test_points_in_cyclotomic_field(self):
        """
        should give every fixed point exact coordinates when they lie in Q(zeta_3)
        """
        zeta = root_of_unity(3)
        cubic = CubicFourfold('twisted', parse_poly('x0^2*x1 - zeta(3)*x1^3 + x2^3 + x3^3 + x4^3 + x5^3', _SIX))
        generator = ProjectiveAutomorphism.diagonal(3, (0, 0, 1, 2, 1, 2))
        report = fixed_locus_on_x(cubic, generator)

        self.assertEqual(report.isolated_point_count(), 9)
        self.assertTrue(all(len(component.points) == 3 and not component.note for component in report.components))
        self.assertTrue(report.verify_points(cubic.reduced_form, generator))

        expected = [[1, 0, 0, 0, 0, 0], [zeta ** 2, 1, 0, 0, 0, 0], [-zeta ** 2, 1, 0, 0, 0, 0],
                    [0, 0, -1, 0, 1, 0], [0, 0, -zeta, 0, 1, 0], [0, 0, -zeta ** 2, 0, 1, 0]]
        points = [point for component in report.components for point in component.points]
        for point in expected:
            self.assertTrue(any(found == point for found in points), point)

    def test_binary_cubic_points(self):
        """
        should keep the point at infinity and report only roots inside the field
        """
        names = ['t0', 't1']
        basis = [[1, 0], [0, 1]]
        self.assertEqual(binary_cubic_points(parse_poly('t0*t1^2 - t1^3', names), basis), [[1, 0], [1, 1]])
        self.assertEqual(binary_cubic_points(parse_poly('t0^3 - 2*t1^3', names), basis), [])
        self.assertEqual(len(binary_cubic_points(parse_poly('t0^3 - 2*t1^3', names), basis, 3)), 0)
        self.assertEqual(len(binary_cubic_points(parse_poly('t0^3 - t1^3', names), basis, 3)), 3)
        self.assertEqual(binary_cubic_points(parse_poly('t0^3 - t1^3', names), basis), [[1, 1]])


class TestCubicFourfold(TestCase):
    """Tests for CubicFourfold"""

    def test_rejects_non_cubics(self):
        """
        should refuse zero and non-cubic forms
        """
        with self.assertRaises(ValueError):
            CubicFourfold('quadric', parse_poly('x0^2 + x1^2', ['x0', 'x1']))


if __name__ == '__main__':
    main()
