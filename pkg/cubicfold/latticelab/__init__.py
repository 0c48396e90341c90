"""Integer lattices, norm-vector enumeration and discriminant numerology"""
from .discriminants import (DiscriminantLabel, EquivariantPair, admissible_discriminants, equivariant_pairs,
                            fano_special_d, has_associated_k3, hassett_nonempty, label_discriminant)
from .errors import IndefiniteLatticeError, NonSymmetricGramError
from .lattice import IntegerLattice, LatticeInvariants, enumerate_norm_vectors, lattice_invariants
