"""Sparse multivariate polynomials, their text form and linear sections"""
from .linear_section import LinearSection, restrict_to_linear_section
from .monomial import Monomial, cubic_monomials, monomials_of_degree, sort_grevlex
from .parser import default_variable_names, format_poly, parse_poly
from .polynomial import MultiPoly, evaluate, partial_derivatives, substitute_linear
