"""Module containing diagonal weight systems and their solver"""
import logging
from collections import defaultdict
from math import gcd
from typing import Iterable, Iterator, List, Sequence, Tuple

from pydantic import BaseModel, validator

from .automorphism import ProjectiveAutomorphism


class WeightSystem(BaseModel):
    """Exponents of diag(zeta_n^w_0, ..., zeta_n^w_N) together with the scalar exponent c"""
    modulus: int
    weights: Tuple[int, ...]
    scalar_exponent: int

    class Config:
        frozen = True

    @validator('modulus')
    def modulus_must_be_positive(cls, value):
        if value < 1:
            raise ValueError('modulus must be positive')
        return value

    @validator('weights', 'scalar_exponent')
    def reduce_modulo(cls, value, values):
        modulus = values.get('modulus', 1)
        if isinstance(value, tuple):
            return tuple(w % modulus for w in value)
        return value % modulus

    def satisfies(self, support: Iterable[Sequence[int]]) -> bool:
        """Every monomial has weight sum c"""
        return all(sum(e * w for e, w in zip(m, self.weights)) % self.modulus == self.scalar_exponent
                   for m in support)

    def is_symplectic(self) -> bool:
        """sum(w) == 2c, i.e. det = lambda^2 for lambda = zeta^c"""
        return sum(self.weights) % self.modulus == (2 * self.scalar_exponent) % self.modulus

    def shifted(self, t: int) -> 'WeightSystem':
        return WeightSystem(modulus=self.modulus, weights=tuple(w + t for w in self.weights),
                            scalar_exponent=self.scalar_exponent + 3 * t)

    def scaled(self, unit: int) -> 'WeightSystem':
        return WeightSystem(modulus=self.modulus, weights=tuple(unit * w for w in self.weights),
                            scalar_exponent=unit * self.scalar_exponent)

    def canonical(self) -> 'WeightSystem':
        """Representative with w_0 = 0, lexicographically least over unit multiples"""
        base = self.shifted(-self.weights[0])
        candidates = [base.scaled(u) for u in range(1, self.modulus + 1) if gcd(u, self.modulus) == 1]
        return min(candidates, key=lambda ws: (ws.weights, ws.scalar_exponent))

    def equivalent(self, other: 'WeightSystem') -> bool:
        return self.modulus == other.modulus and self.canonical() == other.canonical()

    def automorphism(self, **kwargs) -> ProjectiveAutomorphism:
        return ProjectiveAutomorphism.diagonal(self.modulus, self.weights, **kwargs)


def iter_weight_solutions(constraints: Sequence[Tuple[Sequence[int], int]], modulus: int,
                          variable_count: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """
    Yields every (w, c) with w_0 = 0 and sum_i e_i w_i == c + offset (mod n) for each
    (e, offset) constraint. Constraints are checked as soon as their last variable is set
    """
    by_last = defaultdict(list)
    for exponents, offset in constraints:
        last = max((i for i, e in enumerate(exponents) if e), default=0)
        by_last[last].append((tuple(exponents), offset))

    weights = [0] * variable_count

    def consistent(index: int, scalar: int) -> bool:
        for exponents, offset in by_last[index]:
            total = sum(e * w for e, w in zip(exponents, weights))
            if (total - scalar - offset) % modulus:
                return False
        return True

    def extend(index: int, scalar: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
        if index == variable_count:
            yield tuple(weights), scalar
            return
        for value in range(modulus):
            weights[index] = value
            if consistent(index, scalar):
                yield from extend(index + 1, scalar)
        weights[index] = 0

    for scalar in range(modulus):
        weights[0] = 0
        if consistent(0, scalar):
            yield from extend(1, scalar)


def solve_weight_system(support: Iterable[Sequence[int]], modulus: int) -> List[WeightSystem]:
    """
    All (w, c) mod n with every monomial of the support of weight c, one canonical
    representative per class under shifts w + t and unit multiples
    """
    if modulus < 2:
        raise ValueError('weight systems need a modulus of at least 2')

    support = [tuple(m) for m in support]
    if not support:
        return []
    variable_count = len(support[0])

    solutions = set()
    for weights, scalar in iter_weight_solutions([(m, 0) for m in support], modulus, variable_count):
        solutions.add(WeightSystem(modulus=modulus, weights=weights, scalar_exponent=scalar).canonical())

    logging.info(f'{len(solutions)} weight system classes mod {modulus} for {len(support)} monomials')
    return sorted(solutions, key=lambda ws: (ws.weights, ws.scalar_exponent))
