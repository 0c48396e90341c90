"""Module containing tests for finite group closure"""
from unittest import TestCase, main

from cubicfold.autgrp.automorphism import ProjectiveAutomorphism
from cubicfold.autgrp.errors import GroupCapExceededError
from cubicfold.autgrp.group import group_closure, order_within_bounds, satisfies_dihedral_relation, \
    validate_group_order
from cubicfold.mpoly.parser import default_variable_names, parse_poly


class TestGroupClosure(TestCase):
    """Tests for group_closure and the order checks"""

    def test_symmetric_group(self):
        """
        should close a transposition and a 6-cycle to S6
        """
        group = group_closure([ProjectiveAutomorphism.permutation((1, 0, 2, 3, 4, 5)),
                               ProjectiveAutomorphism.permutation((1, 2, 3, 4, 5, 0))])
        self.assertEqual(group.order, 720)
        self.assertIn(ProjectiveAutomorphism.permutation((5, 4, 3, 2, 1, 0)), group)
        self.assertTrue(validate_group_order(group))

    def test_dihedral_group(self):
        """
        should close a rotation and a reflection to the dihedral group of order 10
        """
        rotation = ProjectiveAutomorphism.diagonal(5, (0, 1))
        reflection = ProjectiveAutomorphism.permutation((1, 0))
        self.assertTrue(satisfies_dihedral_relation(rotation, reflection))
        self.assertEqual(group_closure([rotation, reflection]).order, 10)
        self.assertFalse(satisfies_dihedral_relation(rotation, ProjectiveAutomorphism.diagonal(5, (0, 2))))

    def test_symplectic_subgroup(self):
        """
        should find the symplectic elements of a group preserving the Fermat cubic
        """
        fermat = parse_poly(' + '.join(f'x{i}^3' for i in range(6)), default_variable_names(6))
        group = group_closure([ProjectiveAutomorphism.diagonal(3, (1, 0, 0, 0, 0, 0)),
                               ProjectiveAutomorphism.diagonal(3, (0, 1, 0, 0, 0, 0))])
        self.assertEqual(group.order, 9)
        self.assertTrue(group.preserves(fermat))
        self.assertEqual(len(group.symplectic_elements(fermat)), 3)
        self.assertTrue(group.symplectic_subgroup_is_closed(fermat))

    def test_cap(self):
        """
        should stop when the closure grows past the cap
        """
        with self.assertRaises(GroupCapExceededError):
            group_closure([ProjectiveAutomorphism.permutation((1, 0, 2, 3, 4, 5)),
                           ProjectiveAutomorphism.permutation((1, 2, 3, 4, 5, 0))], cap=100)
        with self.assertRaises(ValueError):
            group_closure([])

    def test_order_bounds(self):
        """
        should accept orders within 2^5 3^7 5 7 11 only
        """
        self.assertTrue(order_within_bounds(2520))
        self.assertTrue(order_within_bounds(55))
        self.assertFalse(order_within_bounds(13))
        self.assertFalse(order_within_bounds(64))
        self.assertFalse(order_within_bounds(25))
        self.assertFalse(order_within_bounds(0))


if __name__ == '__main__':
    main()
