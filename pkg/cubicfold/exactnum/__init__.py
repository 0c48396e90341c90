"""Exact arithmetic: rationals, cyclotomic fields, prime fields and specializations between them"""
from .cyclotomic import CyclotomicNumber, cyc_arith, cyc_embed, root_of_unity, sqrt_model
from .prime_field import PrimeFieldElement
from .rational import Rational, as_rational
from .specialization import SpecializationMap, find_specialization, specialize
