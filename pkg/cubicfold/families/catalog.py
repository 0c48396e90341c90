"""
Module containing the catalog of named families and special cubic fourfolds.

Families are given by a diagonal generator and the scalar exponent c of lambda = zeta_n^c;
their members are seeded small-integer combinations of the invariant monomials, with fixed
normal-form terms where the family carries them. Special cubics are stored with their exact
coefficients. Printed generators are kept next to the repaired ones for auditing.
"""
import random
from functools import lru_cache
from fractions import Fraction
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

from pydantic import BaseModel

from ..autgrp.automorphism import ProjectiveAutomorphism
from ..autgrp.symmetries import permutation_symmetry
from ..exactnum.cyclotomic import CyclotomicNumber
from ..mpoly.linear_section import LinearSection
from ..mpoly.monomial import Monomial, monomials_of_degree, sort_grevlex
from ..mpoly.parser import default_variable_names, parse_poly
from ..mpoly.polynomial import MultiPoly
from .cubic import CubicFourfold
from .eigenspaces import family_dimension, invariant_cubic_space
from .errors import UnknownCatalogNameError

COEFFICIENT_CHOICES = (-3, -2, -1, 1, 2, 3)

FAMILY_NAMES = ('V1', 'V2', 'V3', 'F5', 'F7', 'Klein', 'F6a', 'F6b', 'G9a', 'G9b', 'G4', 'G8')

SPECIAL_NAMES = ('X12', 'X15', 'G4planes', 'G8planes', 'Fermat', 'Clebsch', 'X2', 'A6pencil', 'A6K3')

CATALOG_NAMES = ('V1', 'V2', 'V3', 'F5', 'F7', 'Klein', 'F6a', 'F6b', 'G9a', 'G9b', 'X12', 'X15',
                 'G4', 'G4planes', 'G8', 'G8planes', 'Fermat', 'Clebsch', 'X2', 'A6pencil', 'A6K3')

# published moduli dimensions
EXPECTED_DIMENSIONS = {'V1': 8, 'V2': 2, 'V3': 8, 'F5': 4, 'F7': 2, 'Klein': 0,
                       'F6a': 4, 'F6b': 4, 'G4': 6, 'G8': 2}

_SIX = default_variable_names(6)


def _monomials(text: str, names: Sequence[str] = _SIX) -> List[Monomial]:
    """Support of a sum of monomials written as text"""
    return parse_poly(text, names).support()


def _cubics_in(indices: Sequence[int], count: int = 6) -> List[Monomial]:
    found = []
    for monomial in monomials_of_degree(3, len(indices)):
        exponents = [0] * count
        for index, e in zip(indices, monomial):
            exponents[index] = e
        found.append(Monomial(exponents))
    return found


def _products(first: Sequence[Monomial], second: Sequence[Monomial]) -> List[Monomial]:
    return [Monomial(a + b for a, b in zip(m1, m2)) for m1 in first for m2 in second]


def _linear(indices: Sequence[int], count: int = 6) -> List[Monomial]:
    return [Monomial(int(i == j) for i in range(count)) for j in indices]


class _FamilyData(NamedTuple):
    order: int
    weights: Tuple[int, ...]
    scalar_exponent: int
    printed_span: List[Monomial]
    printed_weights: Optional[Tuple[int, ...]] = None
    fixed_terms: str = ''
    random_span: Optional[List[Monomial]] = None
    # (label, images or None when recovered by symmetry search, printed images when they differ)
    extra_generators: Tuple[Tuple[str, Optional[Tuple[int, ...]], Optional[Tuple[int, ...]]], ...] = ()


def _v3_span(first_pair: Tuple[int, int]) -> List[Monomial]:
    mixed = [Monomial.from_variables(6, (i, j, k)) for i in (0, 1) for j in (2, 3) for k in (4, 5)]
    return sort_grevlex(set(_cubics_in(first_pair) + _cubics_in((2, 3)) + _cubics_in((4, 5)) + mixed))


def _g4_span() -> List[Monomial]:
    quadrics = monomials_of_degree(2, 2)
    in_x2_x3 = [Monomial((0, 0) + tuple(q) + (0, 0)) for q in quadrics]
    span = (_products(_linear((0, 1)), in_x2_x3) + _cubics_in((0, 1))
            + _products(_monomials('x4*x5'), _linear((0, 1)))
            + _products(_monomials('x4^2 + x5^2'), _linear((2, 3))))
    return sort_grevlex(set(span))


_FAMILIES: Dict[str, _FamilyData] = {
    'V1': _FamilyData(3, (0, 0, 0, 0, 1, 2), 0,
                      printed_span=sort_grevlex(set(_cubics_in((0, 1, 2, 3)) + _monomials('x4^3 + x5^3')
                                                    + _products(_monomials('x4*x5'), _linear((0, 1, 2, 3)))))),
    'V2': _FamilyData(3, (0, 0, 0, 1, 1, 1), 0,
                      printed_span=sort_grevlex(set(_cubics_in((0, 1, 2)) + _cubics_in((3, 4, 5))))),
    'V3': _FamilyData(3, (0, 0, 1, 1, 2, 2), 0, printed_span=_v3_span((1, 2))),
    'F5': _FamilyData(5, (0, 0, 1, 2, 3, 4), 0,
                      printed_span=sort_grevlex(set(_cubics_in((0, 1)) + _products(_monomials('x2*x5 + x3*x4'),
                                                                                    _linear((0, 1)))
                                                    + _monomials('x2^2*x4 + x2*x3^2 + x3*x5^2 + x4^2*x5'))),
                      fixed_terms='x2^2*x4 + x2*x3^2 + x3*x5^2 + x4^2*x5',
                      random_span=sort_grevlex(set(_cubics_in((0, 1)) + _products(_monomials('x2*x5 + x3*x4'),
                                                                                   _linear((0, 1))))),
                      extra_generators=(('tau', (0, 1, 5, 4, 3, 2), None),)),
    'F7': _FamilyData(7, (1, 5, 2, 6, 3, 0), 5,
                      printed_span=_monomials('x0^2*x4 + x1^2*x2 + x0*x2^2 + x3^2*x5 + x3*x4^2 + x1*x5^2'
                                              ' + x0*x1*x3 + x2*x4*x5'),
                      printed_weights=(1, 5, 4, 6, 2, 3),
                      fixed_terms='x0^2*x4 + x1^2*x2 + x0*x2^2 + x3^2*x5 + x3*x4^2 + x1*x5^2',
                      random_span=_monomials('x0*x1*x3 + x2*x4*x5'),
                      extra_generators=(('tau', (3, 0, 4, 1, 5, 2), (2, 0, 1, 4, 5, 3)),)),
    'Klein': _FamilyData(11, (0, 1, 10, 3, 6, 4), 1,
                         printed_span=_monomials('x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0 + x5^3'),
                         printed_weights=(0, 1, 3, 4, 5, 9),
                         fixed_terms='x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0 + x5^3',
                         random_span=[],
                         extra_generators=(('tau', None, (0, 3, 2, 4, 5, 2)),)),
    'F6a': _FamilyData(6, (3, 3, 0, 0, 2, 4), 0,
                       printed_span=_monomials('x0^2*x2 + x0^2*x3 + x0*x1*x2 + x0*x1*x3 + x1^2*x2 + x1^2*x3'
                                               ' + x2^3 + x2^2*x3 + x2*x3^2 + x2*x4*x5 + x3^3 + x3*x4*x5'
                                               ' + x4^3 + x5^3'),
                       printed_weights=(3, 3, 0, 0, 2, 2)),
    'F6b': _FamilyData(6, (0, 3, 4, 1, 2, 2), 0,
                       printed_span=_monomials('x0^3 + x0*x1^2 + x0*x2*x4 + x0*x2*x5 + x1*x3*x4 + x1*x3*x5'
                                               ' + x2^3 + x2*x3^2 + x4^3 + x4^2*x5 + x4*x5^2 + x5^3')),
    'G9a': _FamilyData(9, (0, 6, 3, 1, 4, 7), 6,
                       printed_span=_monomials('x0^2*x1 + x1^2*x2 + x2^2*x0 + x3^2*x4 + x4^2*x5 + x5^2*x3')),
    'G9b': _FamilyData(9, (0, 3, 6, 1, 1, 4), 3,
                       printed_span=_monomials('x0^2*x1 + x1^2*x2 + x2^2*x0 + x3^2*x4 + x3*x4^2 + x3^3'
                                               ' + x4^3 + x5^3')),
    'G4': _FamilyData(4, (0, 0, 2, 2, 1, 3), 0, printed_span=_g4_span()),
    'G8': _FamilyData(8, (0, 4, 2, 6, 1, 3), 0,
                      printed_span=_monomials('x0*x2*x3 + x1*x2^2 + x1*x3^2 + x0^3 + x0*x1^2 + x1*x4*x5'
                                              ' + x3*x4^2 + x2*x5^2'),
                      printed_weights=(0, 4, 2, 6, 1, 5)),
}

# the repaired split of the order-3 family with two-dimensional eigenspaces
V3_REPAIRED_SPAN = _v3_span((0, 1))

_PRINTED_PROVENANCE = 'printed'
_REPAIRED_PROVENANCE = 'repaired'
_DERIVED_PROVENANCE = 'derived'

# generators found from the equations rather than taken from the printed text
_DERIVED_GENERATORS = {'F6b'}

# projective orders of the generators recovered by symmetry search
_RECOVERED_ORDERS = {('Klein', 'tau'): 5}


class FamilySpec(BaseModel):
    """A family of cubics semi-invariant under one generator, with its dimension count"""
    name: str
    generator: Any
    scalar: Any
    scalar_exponent: int
    basis: List[Any]
    span_dimension: int
    moduli_dimension: int
    expected_dimension: Optional[int] = None
    printed_span: List[Any] = []
    provenance: str = _PRINTED_PROVENANCE

    class Config:
        arbitrary_types_allowed = True

    def printed_span_outside_basis(self) -> List[Monomial]:
        """Printed monomials that are not semi-invariant with the family scalar"""
        basis = set(self.basis)
        return [m for m in self.printed_span if m not in basis]


def _known(name: str, names: Sequence[str]) -> None:
    if name not in names:
        raise UnknownCatalogNameError(name, names)


def family_generator(name: str) -> ProjectiveAutomorphism:
    """The generator used for the family, repaired where the printed one fails"""
    _known(name, FAMILY_NAMES)
    data = _FAMILIES[name]
    if name in _DERIVED_GENERATORS:
        provenance = _DERIVED_PROVENANCE
    elif data.printed_weights is not None:
        provenance = _REPAIRED_PROVENANCE
    else:
        provenance = _PRINTED_PROVENANCE
    return ProjectiveAutomorphism.diagonal(data.order, data.weights, label=f'{name} generator', provenance=provenance)


def printed_family_generator(name: str) -> ProjectiveAutomorphism:
    """The generator exactly as printed"""
    _known(name, FAMILY_NAMES)
    data = _FAMILIES[name]
    weights = data.printed_weights if data.printed_weights is not None else data.weights
    return ProjectiveAutomorphism.diagonal(data.order, weights, label=f'{name} generator', provenance=_PRINTED_PROVENANCE)


def family_scalar(name: str) -> CyclotomicNumber:
    _known(name, FAMILY_NAMES)
    data = _FAMILIES[name]
    return CyclotomicNumber.zeta(data.order, data.scalar_exponent)


def extra_generators(name: str) -> List[ProjectiveAutomorphism]:
    """Further generators of the family's group, repaired where the printed ones fail"""
    _known(name, FAMILY_NAMES)
    generators = []
    for label, images, printed in _FAMILIES[name].extra_generators:
        if images is None:
            images = recovered_generator_images(name, label)
        provenance = _PRINTED_PROVENANCE if printed is None else _REPAIRED_PROVENANCE
        generators.append(ProjectiveAutomorphism.permutation(images, label=f'{name} {label}', provenance=provenance))
    return generators


@lru_cache(maxsize=None)
def recovered_generator_images(name: str, label: str) -> Tuple[int, ...]:
    """Images of a generator recovered as a coordinate permutation preserving the family's fixed terms"""
    data = _FAMILIES[name]
    found = permutation_symmetry(parse_poly(data.fixed_terms, _SIX), data.order, _RECOVERED_ORDERS[(name, label)])
    return found.structure.permutation


def printed_extra_generator_images(name: str) -> Dict[str, Tuple[int, ...]]:
    """Printed substitution images x_i -> x_images[i] of the extra generators, which may not be permutations"""
    _known(name, FAMILY_NAMES)
    return {label: printed if printed is not None else images
            for label, images, printed in _FAMILIES[name].extra_generators}


def printed_family_span(name: str) -> List[Monomial]:
    _known(name, FAMILY_NAMES)
    return list(_FAMILIES[name].printed_span)


def family_spec(name: str) -> FamilySpec:
    generator = family_generator(name)
    data = _FAMILIES[name]
    scalar = family_scalar(name)
    space = invariant_cubic_space(generator, scalar)
    return FamilySpec(name=name, generator=generator, scalar=scalar, scalar_exponent=data.scalar_exponent,
                      basis=space.monomials, span_dimension=space.dimension,
                      moduli_dimension=family_dimension(generator, scalar),
                      expected_dimension=EXPECTED_DIMENSIONS.get(name), printed_span=data.printed_span,
                      provenance=generator.provenance)


def _random_combination(monomials: Sequence[Monomial], rng: random.Random, count: int = 6) -> MultiPoly:
    return MultiPoly(count, {m: Fraction(rng.choice(COEFFICIENT_CHOICES)) for m in monomials})


def _family_member(name: str, seed: int) -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    data = _FAMILIES[name]
    rng = random.Random(f'{name}:{seed}')
    generator = family_generator(name)

    if data.random_span is None:
        monomials = invariant_cubic_space(generator, family_scalar(name)).monomials
    else:
        monomials = data.random_span

    form = _random_combination(monomials, rng)
    if data.fixed_terms:
        form = form + parse_poly(data.fixed_terms, _SIX)

    return CubicFourfold(name, form), [generator] + extra_generators(name)


def _fermat(count: int = 6) -> MultiPoly:
    return parse_poly(' + '.join(f'x{i}^3' for i in range(count)), default_variable_names(count))


def fermat_split_v2_member() -> CubicFourfold:
    """The V2 member f(x0,x1,x2) + g(x3,x4,x5) with both parts Fermat"""
    return CubicFourfold('V2-Fermat-split', _fermat())


def diagonal_surface_v1_member(seed: int = 0) -> CubicFourfold:
    """A V1 member whose fixed cubic surface is the Fermat surface"""
    rng = random.Random(f'V1-diagonal:{seed}')
    form = parse_poly('x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3', _SIX)
    form = form + _random_combination(_products(_monomials('x4*x5'), _linear((0, 1, 2, 3))), rng)
    return CubicFourfold('V1-Fermat-surface', form)


def _x12() -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    form = parse_poly('x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3 - 3*(sqrt(3) + 1)*(x0*x1*x2 + x3*x4*x5)', _SIX)
    omega = CyclotomicNumber.zeta(3)
    one = CyclotomicNumber.from_rational(1, 3)
    zero = CyclotomicNumber.from_rational(0, 3)
    block = [[one, one, one], [one, omega, omega ** 2], [one, omega ** 2, omega]]
    # omega times the complex conjugate of the Fourier block, whose rows 1 and 2 are swapped
    conjugate = [[omega * entry for entry in row] for row in [block[0], block[2], block[1]]]
    matrix = [row + [zero] * 3 for row in block] + [[zero] * 3 + row for row in conjugate]
    generator = ProjectiveAutomorphism(matrix, label='X12 generator', provenance=_DERIVED_PROVENANCE)
    return CubicFourfold('X12', form), [generator]


def _x15_ambient() -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    names = default_variable_names(8)
    form = _fermat(8)
    section = LinearSection.from_forms([parse_poly('x0 + x1 + x2', names), parse_poly('x3 + x4 + x5 + x6 + x7', names)],
                                       eliminate=[0, 7])
    cubic = CubicFourfold('X15', form, section=section, variable_names=names)
    ambient = ProjectiveAutomorphism.permutation((1, 2, 0, 4, 5, 6, 7, 3), label='X15 generator',
                                                 provenance=_DERIVED_PROVENANCE)
    return cubic, [ambient]


def x15_non_symplectic_tau() -> ProjectiveAutomorphism:
    """diag(zeta_3, zeta_3, 1, 1, 1, 1) on the reduced coordinates x1..x6"""
    return ProjectiveAutomorphism.diagonal(3, (1, 1, 0, 0, 0, 0), label='X15 tau', provenance=_PRINTED_PROVENANCE)


def _x15() -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    cubic, ambient = _x15_ambient()
    return cubic, [cubic.reduce_automorphism(a) for a in ambient] + [x15_non_symplectic_tau()]


def _clebsch_ambient() -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    names = default_variable_names(7)
    section = LinearSection.from_forms([parse_poly('x0 + x1 + x2 + x3 + x4 + x5 + x6', names)], eliminate=[6])
    cubic = CubicFourfold('Clebsch', _fermat(7), section=section, variable_names=names)
    generators = [ProjectiveAutomorphism.permutation((1, 2, 0, 3, 4, 5, 6), label='Clebsch 3-cycle'),
                  ProjectiveAutomorphism.permutation((1, 2, 3, 4, 5, 6, 0), label='Clebsch 7-cycle')]
    return cubic, generators


def _clebsch() -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    cubic, ambient = _clebsch_ambient()
    return cubic, [cubic.reduce_automorphism(a) for a in ambient]


def _x2() -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    names = ['x1', 'x2', 'x3', 'x4', 'x5', 'x6']
    form = parse_poly('x1^3 + x2^3 + x3^3 + 12/5*x1*x2*x3 + x1*x4^2 + x2*x5^2 + x3*x6^2'
                      ' + 4/9*sqrt(15)*x4*x5*x6', names)
    generator = ProjectiveAutomorphism.diagonal(6, (0, 2, 4, 3, 2, 1), label='X2 generator')
    return CubicFourfold('X2', form, variable_names=names), [generator]


def _a6_pencil_ambient(t: Any) -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    names = default_variable_names(7)
    form = parse_poly('x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3 + x6*(x0^2 + x1^2 + x2^2 + x3^2 + x4^2 + x5^2)'
                      ' + t*x6^3', names, parameters={'t': Fraction(t)})
    section = LinearSection.from_forms([parse_poly('x0 + x1 + x2 + x3 + x4 + x5', names)], eliminate=[0])
    cubic = CubicFourfold('A6pencil', form, section=section, variable_names=names)
    cycle = ProjectiveAutomorphism.permutation((1, 2, 3, 4, 0, 5, 6), label='A6pencil 5-cycle')
    return cubic, [cycle]


def a6_pencil_member(t: Any) -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    """X_t with its 5-cycle induced on the reduced coordinates x1..x6"""
    cubic, ambient = _a6_pencil_ambient(t)
    return cubic, [cubic.reduce_automorphism(a) for a in ambient]


def _a6_k3() -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    names = ['x1', 'x2', 'x3', 'x4', 'x5']
    cubic_part = parse_poly('x1^3 + x2^3 + x3^3 + x4^3 + x5^3 - (x1 + x2 + x3 + x4 + x5)^3', names)
    quadric = parse_poly('x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + (x1 + x2 + x3 + x4 + x5)^2', names)
    cycle = ProjectiveAutomorphism.permutation((1, 2, 3, 4, 0), label='A6K3 5-cycle')
    return CubicFourfold('A6K3', cubic_part, variable_names=names, companion_forms=[quadric]), [cycle]


def _g4_planes(rng: random.Random) -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    """G4 member with F = x0^3 + x1^3, L2 = x2 + x3 and N1 = N2 = L2^2"""
    coefficients = {name: Fraction(rng.choice(COEFFICIENT_CHOICES)) for name in ('c0', 'c1', 'g', 'h')}
    form = parse_poly('x0^3 + x1^3 + (x0 + x1)*(x2 + x3)^2 + x4*x5*(c0*x0 + c1*x1) + x4^2*(x2 + x3)'
                      ' + x5^2*(g*x2 + h*x3)', _SIX, parameters=coefficients)
    return CubicFourfold('G4planes', form), [family_generator('G4')]


def _g8_planes() -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    """G8 member with a = b = 1 and beta = e = 0"""
    form = parse_poly('x0^3 + x0*x1^2 + x0*x2*x3 + x1*x3^2 + x1*x4*x5 + x3*x4^2', _SIX)
    return CubicFourfold('G8planes', form), [family_generator('G8')]


def _fermat_member() -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    generators = [ProjectiveAutomorphism.permutation((1, 0, 2, 3, 4, 5), label='Fermat swap'),
                  ProjectiveAutomorphism.permutation((1, 2, 3, 4, 5, 0), label='Fermat 6-cycle'),
                  ProjectiveAutomorphism.diagonal(3, (1, 0, 0, 0, 0, 0), label='Fermat cube root')]
    return CubicFourfold('Fermat', _fermat()), generators


def ambient_model(name: str) -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    """Catalog cubics cut by a linear section, with generators acting on the ambient space"""
    if name == 'X15':
        return _x15_ambient()
    if name == 'Clebsch':
        return _clebsch_ambient()
    if name == 'A6pencil':
        return _a6_pencil_ambient(0)
    raise UnknownCatalogNameError(name, ('X15', 'Clebsch', 'A6pencil'))


def catalog_member(name: str, seed: int = 0) -> Tuple[CubicFourfold, List[ProjectiveAutomorphism]]:
    """A concrete member with its generators acting on the reduced model"""
    _known(name, CATALOG_NAMES)

    if name in FAMILY_NAMES:
        return _family_member(name, seed)
    if name == 'X12':
        return _x12()
    if name == 'X15':
        return _x15()
    if name == 'Clebsch':
        return _clebsch()
    if name == 'X2':
        return _x2()
    if name == 'A6pencil':
        return a6_pencil_member(random.Random(f'A6pencil:{seed}').choice(COEFFICIENT_CHOICES))
    if name == 'A6K3':
        return _a6_k3()
    if name == 'G4planes':
        return _g4_planes(random.Random(f'G4planes:{seed}'))
    if name == 'G8planes':
        return _g8_planes()
    return _fermat_member()
