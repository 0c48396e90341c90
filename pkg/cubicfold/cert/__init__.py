"""Finite-field certificates: smoothness scans, plane containment and search, ruled lines and line counts"""
from .errors import BadPrimeError, DegeneratePlaneError, LineNotContainedError, SingularSpecializationError
from .lines import RuledLineConditions, count_lines_on_cubic_surface, find_split_prime, ruled_lines_between
from .planes import (PlaneInP5, contains_plane, describe_pattern, find_disjoint_pair, pattern_plane, planes_disjoint,
                     search_pattern_planes)
from .smoothness import SmoothnessCertificate, certify_generic_member, certify_smooth, specialization_for
