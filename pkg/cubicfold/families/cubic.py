"""Module containing the CubicFourfold record"""
import hashlib
from math import lcm
from typing import List, Optional, Sequence

from ..autgrp.automorphism import ProjectiveAutomorphism
from ..mpoly.errors import DimensionMismatchError
from ..mpoly.linear_section import LinearSection, restrict_to_linear_section
from ..mpoly.parser import default_variable_names, format_poly
from ..mpoly.polynomial import MultiPoly


class CubicFourfold:
    """
    A cubic form, optionally cut by a linear section of a larger projective space.
    The reduced model is the restriction to the section in its kept coordinates
    """

    def __init__(self, name: str, form: MultiPoly, section: Optional[LinearSection] = None,
                 variable_names: Optional[Sequence[str]] = None,
                 companion_forms: Optional[Sequence[MultiPoly]] = None):
        if form.is_zero() or not form.is_homogeneous(3):
            raise ValueError(f'{name} needs a nonzero homogeneous cubic form')
        if section is not None and section.ambient_count != form.variable_count:
            raise DimensionMismatchError(
                f'section lives in {section.ambient_count} variables, the form in {form.variable_count}')

        self.name = name
        self.form = form
        self.section = section
        self.variable_names = list(variable_names or default_variable_names(form.variable_count))
        self.companion_forms = list(companion_forms or [])
        self.reduced_form = form if section is None else restrict_to_linear_section(form, section)

    @property
    def ambient_count(self) -> int:
        return self.form.variable_count

    @property
    def variable_count(self) -> int:
        """Number of coordinates of the reduced model"""
        return self.reduced_form.variable_count

    @property
    def field_order(self) -> int:
        order = self.reduced_form.coefficient_order()
        for companion in self.companion_forms:
            order = lcm(order, companion.coefficient_order())
        return order

    @property
    def reduced_variable_names(self) -> List[str]:
        if self.section is None:
            return self.variable_names
        if self.section.kept_variables is not None:
            return [self.variable_names[j] for j in self.section.kept_variables]
        return default_variable_names(self.section.dimension, 't')

    def reduce_automorphism(self, automorphism: ProjectiveAutomorphism) -> ProjectiveAutomorphism:
        """The automorphism induced on the reduced model by an ambient one preserving the section"""
        if self.section is None:
            return automorphism
        induced = self.section.induced_matrix(automorphism.matrix)
        return ProjectiveAutomorphism(induced, label=automorphism.label, provenance=automorphism.provenance)

    def to_expression(self) -> str:
        return format_poly(self.form, self.variable_names)

    def reduced_expression(self) -> str:
        return format_poly(self.reduced_form, self.reduced_variable_names)

    def form_hash(self) -> str:
        """Short digest of the canonical reduced form text"""
        return hashlib.sha256(self.reduced_expression().encode()).hexdigest()[:16]

    def __repr__(self):
        return f'CubicFourfold({self.name}: {self.to_expression()})'
