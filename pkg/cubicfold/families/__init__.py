"""Invariant cubic spaces, fixed loci and the catalog of named cubic fourfolds"""
from .catalog import (CATALOG_NAMES, EXPECTED_DIMENSIONS, FAMILY_NAMES, SPECIAL_NAMES, FamilySpec, ambient_model,
                      catalog_member, family_generator, family_spec, printed_family_generator)
from .cubic import CubicFourfold
from .eigenspaces import (InvariantCubicSpace, centralizer_dimension, eigenvalue_multiplicities, family_dimension,
                          fixed_locus_p5, invariant_cubic_space)
from .errors import EigenvalueOutsideFieldError, EmptyFamilyError, UnknownCatalogNameError
from .fixed_locus import FixedLocusComponent, FixedLocusReport, fixed_locus_on_x
