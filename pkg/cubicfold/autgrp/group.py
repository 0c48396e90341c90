"""Module containing finite groups of projective automorphisms"""
import logging
from collections import deque
from typing import Callable, Dict, Hashable, List, Sequence

from sympy import factorint

from ..mpoly.polynomial import MultiPoly
from .automorphism import ProjectiveAutomorphism
from .errors import GroupCapExceededError, NotSemiInvariantError
from .semi_invariance import is_symplectic

DEFAULT_GROUP_CAP = 5000

# largest exponent of each prime allowed in the order of a symplectic group
ORDER_BOUNDS = {2: 5, 3: 7, 5: 1, 7: 1, 11: 1}


class AutomorphismGroup:
    """Elements in breadth-first discovery order, keyed by their scalar-normalized matrices"""

    def __init__(self, elements: Sequence[ProjectiveAutomorphism], generators: Sequence[ProjectiveAutomorphism],
                 key: Callable[[ProjectiveAutomorphism], Hashable]):
        self.elements = list(elements)
        self.generators = list(generators)
        self._key = key
        self._index: Dict[Hashable, int] = {key(element): i for i, element in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, element: ProjectiveAutomorphism) -> bool:
        return self._key(element) in self._index

    def symplectic_elements(self, form: MultiPoly) -> List[ProjectiveAutomorphism]:
        return [element for element in self.elements if is_symplectic(form, element)]

    def symplectic_subgroup_is_closed(self, form: MultiPoly) -> bool:
        """The symplectic elements are closed under products"""
        symplectic = self.symplectic_elements(form)
        keys = {self._key(element) for element in symplectic}
        return all(self._key(a * b) in keys for a in symplectic for b in symplectic)

    def preserves(self, form: MultiPoly) -> bool:
        try:
            self.symplectic_elements(form)
        except NotSemiInvariantError:
            return False
        return True


def group_closure(generators: Sequence[ProjectiveAutomorphism], cap: int = DEFAULT_GROUP_CAP) -> AutomorphismGroup:
    """Breadth-first closure under right multiplication by the generators"""
    if cap < 1:
        raise ValueError('the closure cap must be at least 1')
    if not generators:
        raise ValueError('at least one generator is required')

    if all(g.is_monomial() for g in generators):
        key = ProjectiveAutomorphism.canonical_key
    else:
        key = ProjectiveAutomorphism.generic_key

    identity = ProjectiveAutomorphism.identity(generators[0].size)
    elements = [identity]
    seen = {key(identity)}
    frontier = deque([identity])

    logging.info(f'closing a group on {len(generators)} generators (cap {cap})')
    while frontier:
        current = frontier.popleft()
        for generator in generators:
            product = current * generator
            product_key = key(product)
            if product_key in seen:
                continue
            seen.add(product_key)
            elements.append(product)
            frontier.append(product)
            if len(elements) > cap:
                raise GroupCapExceededError(cap)

    logging.info(f'group closure finished with {len(elements)} elements')
    return AutomorphismGroup(elements, generators, key)


def validate_group_order(group: AutomorphismGroup) -> bool:
    """|G| = 2^a 3^b 5^c 7^d 11^e within the admissible exponent bounds"""
    return order_within_bounds(group.order)


def order_within_bounds(order: int) -> bool:
    if order < 1:
        return False
    return all(prime in ORDER_BOUNDS and exponent <= ORDER_BOUNDS[prime]
               for prime, exponent in factorint(order).items())


def satisfies_dihedral_relation(rotation: ProjectiveAutomorphism, reflection: ProjectiveAutomorphism) -> bool:
    """tau . phi . tau^-1 == phi^-1 projectively"""
    conjugate = reflection * rotation * reflection.inverse()
    return conjugate.projectively_equal(rotation.inverse())
