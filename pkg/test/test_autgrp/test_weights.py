"""Module containing tests for weight systems and monomial symmetries"""
from unittest import TestCase, main

from cubicfold.autgrp.automorphism import order_in_pgl
from cubicfold.autgrp.errors import SymmetryNotFoundError
from cubicfold.autgrp.semi_invariance import semi_invariance
from cubicfold.autgrp.symmetries import monomial_symmetries, permutation_symmetry
from cubicfold.autgrp.weights import WeightSystem, solve_weight_system
from cubicfold.mpoly.parser import default_variable_names, parse_poly
from cubicfold.utils.errors import BudgetExceededError

KLEIN = 'x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0 + x5^3'


class TestWeightSystem(TestCase):
    """Tests for WeightSystem and solve_weight_system"""

    def test_satisfies(self):
        """
        should check that every monomial has weight c
        """
        system = WeightSystem(modulus=3, weights=(0, 1, 2), scalar_exponent=0)
        self.assertTrue(system.satisfies([(3, 0, 0), (0, 3, 0), (1, 1, 1)]))
        self.assertFalse(system.satisfies([(2, 1, 0)]))
        self.assertTrue(system.is_symplectic())

    def test_equivalence(self):
        """
        should identify systems up to shifts and unit multiples
        """
        first = WeightSystem(modulus=3, weights=(0, 2, 1), scalar_exponent=0)
        second = WeightSystem(modulus=3, weights=(1, 2, 0), scalar_exponent=0)
        self.assertTrue(first.equivalent(second))
        self.assertEqual(second.canonical().weights, (0, 1, 2))
        self.assertFalse(first.equivalent(WeightSystem(modulus=3, weights=(0, 0, 1), scalar_exponent=0)))

    def test_solve(self):
        """
        should list one canonical representative per class
        """
        solutions = solve_weight_system([(3, 0), (0, 3)], 3)
        self.assertEqual([s.weights for s in solutions], [(0, 0), (0, 1)])
        self.assertEqual(solve_weight_system([], 3), [])

        with self.assertRaises(ValueError):
            solve_weight_system([(3, 0)], 1)


class TestMonomialSymmetries(TestCase):
    """Tests for monomial_symmetries"""

    def test_binary_fermat(self):
        """
        should find both permutations with the three diagonal twists each
        """
        form = parse_poly('x0^3 + x1^3', ['x0', 'x1'])
        symmetries = monomial_symmetries(form, 3)
        self.assertEqual(len(symmetries), 6)
        self.assertEqual(len([s for s in symmetries if s.structure.is_diagonal]), 3)

    def test_budget(self):
        """
        should refuse searches beyond the work budget
        """
        form = parse_poly('x0^3 + x1^3', ['x0', 'x1'])
        with self.assertRaises(BudgetExceededError):
            monomial_symmetries(form, 3, budget=5)

    def test_fermat_fourfold(self):
        """
        should find 6! permutations times 3^5 diagonal twists on the Fermat cubic fourfold
        """
        form = parse_poly(' + '.join(f'x{i}^3' for i in range(6)), default_variable_names(6))
        self.assertEqual(len(monomial_symmetries(form, 3)), 174960)

    def test_klein_cubic(self):
        """
        should find the 55 monomial symmetries of the Klein cubic, including one of order 11
        """
        symmetries = monomial_symmetries(parse_poly(KLEIN, default_variable_names(6)), 11)
        self.assertEqual(len(symmetries), 55)
        self.assertIn(11, {order_in_pgl(s) for s in symmetries})

    def test_trivial_modulus(self):
        """
        should find the identity and the swap when no roots of unity are allowed
        """
        symmetries = monomial_symmetries(parse_poly('x0^3 + x1^3', ['x0', 'x1']), 1)
        self.assertEqual(sorted(s.structure.permutation for s in symmetries), [(0, 1), (1, 0)])


class TestPermutationSymmetry(TestCase):
    """Tests for permutation_symmetry"""

    def test_klein_five_cycle(self):
        """
        should recover the cyclic shift of x0..x4 as the order-5 permutation of the Klein cubic
        """
        form = parse_poly(KLEIN, default_variable_names(6))
        tau = permutation_symmetry(form, 11, 5)
        self.assertEqual(tau.structure.permutation, (1, 2, 3, 4, 0, 5))
        self.assertEqual(order_in_pgl(tau), 5)
        self.assertIsNotNone(semi_invariance(form, tau))

    def test_missing_order(self):
        """
        should raise SymmetryNotFoundError when no permutation of that order preserves the form
        """
        with self.assertRaises(SymmetryNotFoundError):
            permutation_symmetry(parse_poly(KLEIN, default_variable_names(6)), 11, 7)


if __name__ == '__main__':
    main()
