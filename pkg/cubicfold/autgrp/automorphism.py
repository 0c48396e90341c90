"""Module containing projective automorphisms of P^N given by matrices over cyclotomic fields"""
from fractions import Fraction
from math import lcm
from typing import Any, List, NamedTuple, Optional, Sequence, Tuple

from ..exactnum.cyclotomic import CyclotomicNumber
from ..utils import linalg
from .errors import NonInvertibleAutomorphismError, OrderCapExceededError

DEFAULT_ORDER_CAP = 1000


class MonomialStructure(NamedTuple):
    """
    Matrix whose row i has the single entry zeta_n^weights[permutation[i]] in column permutation[i],
    i.e. (M.x)_i = zeta_n^w_{pi(i)} x_{pi(i)}. Diagonal matrices have the identity permutation
    """
    permutation: Tuple[int, ...]
    order: int
    weights: Tuple[int, ...]

    @property
    def is_diagonal(self) -> bool:
        return all(i == j for i, j in enumerate(self.permutation))


def _permutation_sign(permutation: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(permutation)
    for start in range(len(permutation)):
        if seen[start]:
            continue
        length = 0
        current = start
        while not seen[current]:
            seen[current] = True
            current = permutation[current]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class ProjectiveAutomorphism:
    """
    Invertible square matrix regarded up to a nonzero scalar. Monomial elements keep their
    (permutation, n, weights) structure and build the matrix only when asked for it
    """

    def __init__(self, matrix: Optional[Sequence[Sequence[Any]]] = None,
                 structure: Optional[MonomialStructure] = None, label: Optional[str] = None,
                 provenance: str = 'printed', check: bool = True):
        if matrix is None and structure is None:
            raise ValueError('either a matrix or a monomial structure is required')

        self._matrix = None if matrix is None else tuple(tuple(row) for row in matrix)
        self.structure = structure
        self.label = label
        self.provenance = provenance
        self.size = len(self._matrix) if self._matrix is not None else len(structure.permutation)
        self._key = None

        if self._matrix is not None and any(len(row) != self.size for row in self._matrix):
            raise NonInvertibleAutomorphismError('matrix is not square')
        if check and self._matrix is not None and self.structure is None and self.determinant() == 0:
            raise NonInvertibleAutomorphismError(f'{label or "matrix"} is not invertible')

    @classmethod
    def diagonal(cls, order: int, weights: Sequence[int], **kwargs) -> 'ProjectiveAutomorphism':
        """diag(zeta_order^w_0, ..., zeta_order^w_N)"""
        weights = tuple(w % order for w in weights)
        structure = MonomialStructure(tuple(range(len(weights))), order, weights)
        return cls(structure=structure, **kwargs)

    @classmethod
    def monomial(cls, permutation: Sequence[int], order: int, weights: Sequence[int],
                 **kwargs) -> 'ProjectiveAutomorphism':
        if sorted(permutation) != list(range(len(permutation))):
            raise NonInvertibleAutomorphismError(f'{tuple(permutation)} is not a permutation')
        structure = MonomialStructure(tuple(permutation), order, tuple(w % order for w in weights))
        return cls(structure=structure, **kwargs)

    @classmethod
    def permutation(cls, images: Sequence[int], **kwargs) -> 'ProjectiveAutomorphism':
        """The substitution x_i -> x_{images[i]}"""
        return cls.monomial(images, 1, [0] * len(images), **kwargs)

    @classmethod
    def identity(cls, size: int) -> 'ProjectiveAutomorphism':
        return cls.diagonal(1, [0] * size, label='identity', provenance='derived')

    @property
    def matrix(self) -> Tuple[Tuple[Any, ...], ...]:
        if self._matrix is None:
            permutation, order, weights = self.structure
            zero = CyclotomicNumber.from_rational(0, order)
            rows = []
            for i in range(self.size):
                row = [zero] * self.size
                row[permutation[i]] = CyclotomicNumber.zeta(order, weights[permutation[i]])
                rows.append(row)
            self._matrix = tuple(tuple(row) for row in rows)
        return self._matrix

    @property
    def field_order(self) -> int:
        if self.structure is not None:
            return self.structure.order
        order = 1
        for row in self.matrix:
            for entry in row:
                order = lcm(order, getattr(entry, 'order', 1))
        return order

    def is_monomial(self) -> bool:
        return self.structure is not None

    def determinant(self):
        if self.structure is not None:
            permutation, order, weights = self.structure
            return CyclotomicNumber.zeta(order, sum(weights)) * _permutation_sign(permutation)
        return linalg.determinant([[_as_field(e) for e in row] for row in self.matrix])

    def __mul__(self, other: 'ProjectiveAutomorphism') -> 'ProjectiveAutomorphism':
        """Matrix product self . other"""
        if self.structure is not None and other.structure is not None:
            p1, n1, w1 = self.structure
            p2, n2, w2 = other.structure
            order = lcm(n1, n2)
            s1, s2 = order // n1, order // n2
            permutation = tuple(p2[p1[i]] for i in range(self.size))
            weights = [0] * self.size
            for i in range(self.size):
                weights[permutation[i]] = (w1[p1[i]] * s1 + w2[permutation[i]] * s2) % order
            return ProjectiveAutomorphism(structure=MonomialStructure(permutation, order, tuple(weights)),
                                          provenance='derived')

        product = linalg.mat_mul([[_as_field(e) for e in row] for row in self.matrix],
                                 [[_as_field(e) for e in row] for row in other.matrix])
        return ProjectiveAutomorphism(product, provenance='derived', check=False)

    def inverse(self) -> 'ProjectiveAutomorphism':
        if self.structure is not None:
            permutation, order, weights = self.structure
            inverse_permutation = [0] * self.size
            for i, j in enumerate(permutation):
                inverse_permutation[j] = i
            new_weights = tuple((-weights[permutation[k]]) % order for k in range(self.size))
            return ProjectiveAutomorphism(
                structure=MonomialStructure(tuple(inverse_permutation), order, new_weights), provenance='derived')

        inverse = linalg.inverse_matrix([[_as_field(e) for e in row] for row in self.matrix])
        return ProjectiveAutomorphism(inverse, provenance='derived', check=False)

    def __pow__(self, exponent: int) -> 'ProjectiveAutomorphism':
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = ProjectiveAutomorphism.identity(self.size)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scaled(self, factor: Any) -> 'ProjectiveAutomorphism':
        """Same projective element, matrix multiplied by factor"""
        return ProjectiveAutomorphism([[e * factor for e in row] for row in self.matrix],
                                      label=self.label, provenance=self.provenance, check=False)

    def is_scalar(self) -> bool:
        if self.structure is not None:
            permutation, _, weights = self.structure
            return all(i == j for i, j in enumerate(permutation)) and len(set(weights)) == 1

        diagonal = self.matrix[0][0]
        if diagonal == 0:
            return False
        for i, row in enumerate(self.matrix):
            for j, entry in enumerate(row):
                if i == j and entry != diagonal:
                    return False
                if i != j and entry != 0:
                    return False
        return True

    def apply(self, point: Sequence[Any]) -> List[Any]:
        """M . point"""
        return linalg.mat_vec([[_as_field(e) for e in row] for row in self.matrix],
                              [_as_field(v) for v in point])

    def canonical_key(self) -> Tuple:
        """Key equal for matrices differing by a scalar: first nonzero row-major entry divided out"""
        if self._key is None:
            if self.structure is not None:
                permutation, order, weights = self.structure
                base = weights[permutation[0]]
                self._key = ('monomial', permutation,
                             tuple(Fraction((w - base) % order, order) for w in weights))
            else:
                entries = [_as_field(e) for row in self.matrix for e in row]
                pivot = next(e for e in entries if e != 0)
                self._key = ('matrix', tuple(e / pivot for e in entries))
        return self._key

    def generic_key(self) -> Tuple:
        """Matrix-based canonical key, usable when monomial and general elements are mixed"""
        entries = [_as_field(e) for row in self.matrix for e in row]
        pivot = next(e for e in entries if e != 0)
        return ('matrix', tuple(e / pivot for e in entries))

    def projectively_equal(self, other: 'ProjectiveAutomorphism') -> bool:
        if self.structure is not None and other.structure is not None:
            return self.canonical_key() == other.canonical_key()
        return self.generic_key() == other.generic_key()

    def describe(self) -> str:
        if self.structure is not None:
            permutation, order, weights = self.structure
            if self.structure.is_diagonal:
                return f'diag(zeta_{order}^{list(weights)})'
            return f'perm {list(permutation)} . diag(zeta_{order}^{list(weights)})'
        return 'matrix [' + '; '.join(', '.join(str(e) for e in row) for row in self.matrix) + ']'

    def __repr__(self):
        name = f'{self.label}: ' if self.label else ''
        return f'ProjectiveAutomorphism({name}{self.describe()})'


def _as_field(value: Any) -> Any:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


def order_in_pgl(automorphism: ProjectiveAutomorphism, cap: int = DEFAULT_ORDER_CAP) -> int:
    """Least k >= 1 with M^k scalar"""
    power = automorphism
    for k in range(1, cap + 1):
        if power.is_scalar():
            return k
        power = power * automorphism
    raise OrderCapExceededError(f'{automorphism!r} has no scalar power up to exponent {cap}')
