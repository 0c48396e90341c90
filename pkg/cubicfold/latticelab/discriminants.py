"""Module containing discriminant labels and the numerology of special cubic fourfolds"""
from typing import List, NamedTuple, Tuple

from pydantic import BaseModel, validator
from sympy import factorint

from .errors import IndefiniteLatticeError
from .lattice import IntegerLattice


class DiscriminantLabel(BaseModel):
    """The rank-2 lattice <h^2, v> whose determinant is the discriminant d of C_d"""
    gram: List[List[int]]
    d: int

    class Config:
        allow_mutation = False

    @validator('gram')
    def gram_is_two_by_two(cls, gram):
        if len(gram) != 2 or any(len(row) != 2 for row in gram) or gram[0][1] != gram[1][0]:
            raise ValueError(f'{gram} is not a symmetric 2x2 Gram matrix')
        return gram

    @validator('d')
    def d_matches_gram(cls, d, values):
        gram = values.get('gram')
        if gram is not None and d != gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0]:
            raise ValueError(f'{d} is not the determinant of {gram}')
        return d

    @property
    def well_formed(self) -> bool:
        return self.d % 6 in (0, 2)


def label_discriminant(h_self: int, v_norm: int, v_dot_h: int) -> DiscriminantLabel:
    """d = det [[h.h, v.h], [v.h, v.v]]; with h.h = 3 and v orthogonal to h, d = 3 v.v"""
    gram = [[h_self, v_dot_h], [v_dot_h, v_norm]]
    if not IntegerLattice(gram).is_positive_definite():
        raise IndefiniteLatticeError(f'{gram} is not positive definite')
    return DiscriminantLabel(gram=gram, d=h_self * v_norm - v_dot_h * v_dot_h)


def hassett_nonempty(d: int) -> bool:
    """C_d is nonempty iff d > 6 and d = 0, 2 mod 6"""
    return d > 6 and d % 6 in (0, 2)


def has_associated_k3(d: int) -> bool:
    """
    d > 6, 4 and 9 do not divide d, and no odd prime p = 2 mod 3 divides d. The prime 2 is
    exempt, otherwise d = 14 would fail; nonemptiness of C_d is required as well
    """
    if d <= 6 or d % 4 == 0 or d % 9 == 0:
        return False
    if any(p % 3 == 2 and p != 2 for p in factorint(d)):
        return False
    return hassett_nonempty(d)


def admissible_discriminants(bound: int) -> List[int]:
    return [d for d in range(1, bound + 1) if has_associated_k3(d)]


def fano_special_d(bound: int) -> List[Tuple[int, int]]:
    """Pairs (d, n) with d = 2(n^2 + n + 1) <= bound and n >= 2"""
    pairs = []
    n = 2
    while 2 * (n * n + n + 1) <= bound:
        pairs.append((2 * (n * n + n + 1), n))
        n += 1
    return pairs


class EquivariantPair(NamedTuple):
    n: int
    m: int
    source_discriminant: int
    target_discriminant: int


def equivariant_pairs(n_max: int) -> List[EquivariantPair]:
    """
    n <= n_max with 3 | n^2 + n + 1 and d + 1 = m^2 + m + 2 for an integer m >= 2, where
    d = (n^2 + n + 1) / 3; reported with the discriminants 6d and 2d
    """
    pairs = []
    for n in range(2, n_max + 1):
        total = n * n + n + 1
        if total % 3:
            continue
        d = total // 3
        m = 2
        while m * m + m < d - 1:
            m += 1
        if m * m + m == d - 1:
            pairs.append(EquivariantPair(n, m, 6 * d, 2 * d))
    return pairs
