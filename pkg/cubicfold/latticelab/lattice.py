"""Module containing integer lattices given by Gram matrices and norm-vector enumeration"""
import logging
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import List, NamedTuple, Optional, Sequence, Tuple

from sympy import Matrix

from .errors import IndefiniteLatticeError, NonSymmetricGramError


class LatticeInvariants(NamedTuple):
    rank: int
    determinant: int
    positive_definite: bool


class IntegerLattice:
    """Z^n with the bilinear form given by a symmetric integer Gram matrix"""

    def __init__(self, gram: Sequence[Sequence[int]]):
        size = len(gram)
        if any(len(row) != size for row in gram):
            raise NonSymmetricGramError(f'Gram matrix {gram} is not square')
        if any(int(gram[i][j]) != int(gram[j][i]) for i in range(size) for j in range(size)):
            raise NonSymmetricGramError(f'Gram matrix {gram} is not symmetric')
        self.gram = [[int(e) for e in row] for row in gram]
        self._pivots = None

    @property
    def rank(self) -> int:
        return len(self.gram)

    def norm(self, vector: Sequence[int]) -> int:
        return self.inner(vector, vector)

    def inner(self, first: Sequence[int], second: Sequence[int]) -> int:
        return sum(first[i] * self.gram[i][j] * second[j] for i in range(self.rank) for j in range(self.rank))

    def determinant(self) -> int:
        if not self.gram:
            return 1
        return int(Matrix(self.gram).det(method='bareiss'))

    def ldl(self) -> Tuple[List[Fraction], List[List[Fraction]]]:
        """
        Exact G = U^T D U with U unit upper triangular, so that
        q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2. Only meaningful when every d_i is nonzero
        """
        if self._pivots is None:
            size = self.rank
            pivots: List[Fraction] = []
            upper = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
            for i in range(size):
                d = Fraction(self.gram[i][i]) - sum(pivots[k] * upper[k][i] ** 2 for k in range(i))
                pivots.append(d)
                if d == 0:
                    break
                for j in range(i + 1, size):
                    upper[i][j] = (self.gram[i][j] - sum(pivots[k] * upper[k][i] * upper[k][j]
                                                         for k in range(i))) / d
            self._pivots = (pivots, upper)
        return self._pivots

    def is_positive_definite(self) -> bool:
        """All leading principal minors positive, i.e. every LDL pivot positive"""
        pivots, _ = self.ldl()
        return len(pivots) == self.rank and all(d > 0 for d in pivots)

    def coordinate_bounds(self, norm: int) -> List[int]:
        """|x_i| <= sqrt(norm * (G^-1)_ii) for every vector of the given norm"""
        inverse = Matrix(self.gram).inv()
        bounds = []
        for i in range(self.rank):
            limit = Fraction(norm) * Fraction(int(inverse[i, i].p), int(inverse[i, i].q))
            bounds.append(_floor_sqrt(limit))
        return bounds

    def __repr__(self):
        return f'IntegerLattice({self.gram})'


def _floor_sqrt(value: Fraction) -> int:
    if value <= 0:
        return 0
    return isqrt(value.numerator * value.denominator) // value.denominator


def lattice_invariants(lattice: IntegerLattice) -> LatticeInvariants:
    return LatticeInvariants(lattice.rank, lattice.determinant(), lattice.is_positive_definite())


def enumerate_norm_vectors(lattice: IntegerLattice, norm: int, bound: Optional[int] = None) -> List[Tuple[int, ...]]:
    """
    All v with v^T G v = norm and, when bound is given, coordinates in [-bound, bound].
    Coordinates are fixed from the last one down, pruning with the exact LDL pivots
    """
    if not lattice.is_positive_definite():
        raise IndefiniteLatticeError(f'{lattice} is not positive definite')
    if bound is not None and bound < 1:
        raise ValueError(f'bound must be at least 1, got {bound}')
    if norm < 0:
        return []

    pivots, upper = lattice.ldl()
    size = lattice.rank
    limits = lattice.coordinate_bounds(norm)
    if bound is not None:
        limits = [min(limit, bound) for limit in limits]

    found = []
    coordinates = [0] * size
    target = Fraction(norm)

    def descend(index: int, remaining: Fraction) -> None:
        if index < 0:
            if remaining == 0:
                found.append(tuple(coordinates))
            return

        center = -sum((upper[index][j] * coordinates[j] for j in range(index + 1, size)), Fraction(0))
        radius_squared = remaining / pivots[index]
        low = max(-limits[index], ceil(center - _ceil_sqrt(radius_squared)))
        high = min(limits[index], floor(center + _ceil_sqrt(radius_squared)))

        for value in range(low, high + 1):
            offset = pivots[index] * (value - center) ** 2
            if offset <= remaining:
                coordinates[index] = value
                descend(index - 1, remaining - offset)
        coordinates[index] = 0

    descend(size - 1, target)
    logging.info(f'{len(found)} vectors of norm {norm} found')
    return sorted(found)


def _ceil_sqrt(value: Fraction) -> int:
    """Smallest integer r >= 0 with r^2 >= value"""
    root = _floor_sqrt(value)
    return root if Fraction(root * root) >= value else root + 1
