"""Module containing exponent-vector monomials and their graded reverse lexicographic order"""
from itertools import combinations_with_replacement
from typing import Iterable, List, Sequence, Tuple


class Monomial(tuple):
    """Exponent vector, one entry per variable. Hashes and compares like the plain tuple"""

    def __new__(cls, exponents: Iterable[int]):
        exponents = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exponents):
            raise ValueError(f'negative exponent in {exponents}')
        return super().__new__(cls, exponents)

    @classmethod
    def from_variables(cls, variable_count: int, indices: Iterable[int]) -> 'Monomial':
        """Monomial of the product of the listed variables, repeats allowed"""
        exponents = [0] * variable_count
        for index in indices:
            exponents[index] += 1
        return cls(exponents)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(self)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def variable_count(self) -> int:
        return len(self)

    def grevlex_key(self) -> Tuple:
        """Sort key; larger keys come first in graded reverse lexicographic order"""
        return grevlex_key(self)

    def variables(self) -> List[int]:
        """Variable indices with multiplicity, e.g. x0^2*x3 -> [0, 0, 3]"""
        return [i for i, e in enumerate(self) for _ in range(e)]

    def weight(self, weights: Sequence[int], modulus: int) -> int:
        """Weight sum of the monomial modulo `modulus`"""
        return sum(e * w for e, w in zip(self, weights)) % modulus

    def permuted(self, permutation: Sequence[int]) -> 'Monomial':
        """Monomial obtained by the substitution x_i -> x_{permutation[i]}"""
        exponents = [0] * len(self)
        for i, e in enumerate(self):
            exponents[permutation[i]] += e
        return Monomial(exponents)

    def to_expression(self, names: Sequence[str]) -> str:
        parts = []
        for name, e in zip(names, self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f'{name}^{e}')
        return '*'.join(parts) if parts else '1'


def grevlex_key(exponents: Sequence[int]) -> Tuple:
    """Higher degree first; ties broken by the smaller exponent in the last differing variable"""
    return sum(exponents), tuple(-e for e in reversed(exponents))


def sort_grevlex(monomials: Iterable[Sequence[int]]) -> List[Monomial]:
    """Monomials in descending graded reverse lexicographic order"""
    return [Monomial(m) for m in sorted(monomials, key=grevlex_key, reverse=True)]


def monomials_of_degree(degree: int, variable_count: int) -> List[Monomial]:
    """All monomials of the given degree, in descending graded reverse lexicographic order"""
    found = [Monomial.from_variables(variable_count, indices)
             for indices in combinations_with_replacement(range(variable_count), degree)]
    return sort_grevlex(found)


def cubic_monomials(variable_count: int = 6) -> List[Monomial]:
    """The 56 cubic monomials in six variables (or their analogue for other counts)"""
    return monomials_of_degree(3, variable_count)
