"""Projective automorphisms, semi-invariance, weight systems and finite group closure"""
from .automorphism import MonomialStructure, ProjectiveAutomorphism, order_in_pgl
from .errors import (GroupCapExceededError, NonInvertibleAutomorphismError, NotSemiInvariantError,
                     OrderCapExceededError, SymmetryNotFoundError)
from .group import (AutomorphismGroup, group_closure, order_within_bounds, satisfies_dihedral_relation,
                    validate_group_order)
from .semi_invariance import is_symplectic, semi_invariance, transform_form
from .symmetries import monomial_symmetries, permutation_symmetry
from .weights import WeightSystem, iter_weight_solutions, solve_weight_system
