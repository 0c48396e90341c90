"""Module containing published reference values that cannot be recomputed from equations alone"""

# dimension of the locus of cubic fourfolds with a symplectic automorphism of prime order p
NATURAL_LOCUS_DIMENSIONS = {3: 7, 5: 3, 7: 1}

# family name -> (order of the generator, family dimension)
NATURAL_FAMILIES = {'V3': (3, 8), 'F7': (7, 2)}

ALGEBRAIC_LATTICE_RANKS = {'V1': 13, 'V3': 13, 'F5': 17, 'F7': 19}

PRIMITIVE_ALGEBRAIC_RANKS = {'F7': 18}

# ranks of the coinvariant lattice for the maximal cases
MAXIMAL_COINVARIANT_RANKS = (19, 20)

# Gram matrix of the primitive sublattice of A(X)_prim for V3
V3_GRAM = [[4, 1, 0], [1, 4, 0], [0, 0, 4]]

# discriminants named for cubics with associated K3 surfaces
NAMED_ADMISSIBLE_DISCRIMINANTS = (14, 26, 38, 42)


def moduli_dimension(coinvariant_rank: int) -> int:
    """Dimension of the moduli space of pairs (G, S) with rank S = coinvariant_rank"""
    if not 0 <= coinvariant_rank <= 20:
        raise ValueError(f'coinvariant rank must lie in [0, 20], got {coinvariant_rank}')
    return 20 - coinvariant_rank
