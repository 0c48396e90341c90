"""Module containing specialization homomorphisms from cyclotomic fields into prime fields"""
import logging
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Union

from pydantic import BaseModel, root_validator
from sympy import is_quad_residue, isprime, n_order, nextprime, primitive_root, sqrt_mod

from .cyclotomic import CyclotomicNumber, sqrt_model
from .errors import SpecializationError
from .prime_field import PrimeFieldElement

DEFAULT_MAX_PRIME = 100000


class SpecializationMap(BaseModel):
    """zeta_n -> root_image in F_p, with the induced images of designated square roots"""
    source_order: int
    prime: int
    root_image: int
    surd_images: Dict[int, int] = {}

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def check_images(cls, values):
        n, p, root = values['source_order'], values['prime'], values['root_image']

        if not isprime(p) or p == 3:
            raise ValueError(f'{p} is not a usable prime')
        if pow(root, n, p) != 1 or n_order(root, p) != n:
            raise ValueError(f'{root} does not have multiplicative order {n} mod {p}')
        for surd, image in values.get('surd_images', {}).items():
            if (image * image - surd) % p:
                raise ValueError(f'{image} is not a square root of {surd} mod {p}')

        return values

    def summary(self) -> str:
        surds = ', '.join(f'sqrt({k})->{v}' for k, v in sorted(self.surd_images.items()))
        text = f'zeta({self.source_order})->{self.root_image} mod {self.prime}'
        return f'{text}; {surds}' if surds else text


def _primitive_roots_of_order(n: int, p: int) -> List[int]:
    """All elements of multiplicative order exactly n in F_p, ascending"""
    if n == 1:
        return [1]
    generator = int(primitive_root(p))
    base = pow(generator, (p - 1) // n, p)
    return sorted(pow(base, j, p) for j in range(1, n) if gcd(j, n) == 1)


def specialize_to_int(value: Union[CyclotomicNumber, Fraction, int], s: SpecializationMap) -> int:
    """Image of value in F_p as a plain integer in [0, p)"""
    p = s.prime

    if isinstance(value, (int, Fraction)):
        value = Fraction(value)
        if value.denominator % p == 0:
            raise SpecializationError(f'denominator of {value} is divisible by {p}')
        return value.numerator * pow(value.denominator, -1, p) % p

    if s.source_order % value.order:
        raise SpecializationError(f'order {value.order} does not divide {s.source_order}')

    root = pow(s.root_image, s.source_order // value.order, p)
    total = 0
    power = 1
    for c in value.coeffs:
        if c:
            if c.denominator % p == 0:
                raise SpecializationError(f'denominator of {c} is divisible by {p}')
            total += c.numerator * pow(c.denominator, -1, p) * power
        power = power * root % p

    return total % p


def specialize(value: Union[CyclotomicNumber, Fraction, int], s: SpecializationMap) -> PrimeFieldElement:
    """Ring homomorphism Q(zeta_n) -> F_p defined by s"""
    return PrimeFieldElement(specialize_to_int(value, s), s.prime)


def _induced_surd_images(n: int, p: int, root: int, surds: Iterable[int]) -> Dict[int, int]:
    images = {}
    for surd in surds:
        model = sqrt_model(surd)
        if n % model.order == 0:
            trial = SpecializationMap.construct(source_order=n, prime=p, root_image=root, surd_images={})
            images[surd] = specialize_to_int(model, trial)
        else:
            images[surd] = int(min(sqrt_mod(surd % p, p, all_roots=True)))
    return images


def find_specialization(n: int, surds: Iterable[int] = (), p_min: int = 5,
                        p_max: int = DEFAULT_MAX_PRIME) -> SpecializationMap:
    """
    Smallest prime p in [p_min, p_max], p != 3, p = 1 mod n, with every surd a nonzero square mod p.
    Among the elements of order n the smallest one whose induced square roots agree with the
    smallest modular square roots is chosen; failing that, the smallest one
    """
    surds = sorted(set(surds))
    if n < 1:
        raise SpecializationError(f'order must be positive, got {n}')

    p = int(nextprime(max(p_min, 5) - 1))
    while p <= p_max:
        if (p - 1) % n == 0 and all(surd % p and is_quad_residue(surd % p, p) for surd in surds):
            break
        p = int(nextprime(p))
    else:
        raise SpecializationError(f'no prime p = 1 mod {n} in [{p_min}, {p_max}] with {surds} square')

    wanted = {surd: int(min(sqrt_mod(surd % p, p, all_roots=True))) for surd in surds}
    roots = _primitive_roots_of_order(n, p)
    chosen, images = roots[0], _induced_surd_images(n, p, roots[0], surds)

    for root in roots:
        candidate = _induced_surd_images(n, p, root, surds)
        if candidate == wanted:
            chosen, images = root, candidate
            break

    logging.info(f'specialization zeta({n}) -> {chosen} mod {p}')
    return SpecializationMap(source_order=n, prime=p, root_image=chosen, surd_images=images)
