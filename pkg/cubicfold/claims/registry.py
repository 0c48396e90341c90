"""Module containing the ordered registry of claim groups"""
import logging
from typing import List, Type

from ..report.models import ClaimRecord
from .base import BaseClaimController
from .dimensions import DimensionClaims
from .errors import UnknownClaimGroupError
from .fixed_loci import FixedLocusClaims
from .groups import GroupClaims
from .lattice import LatticeClaims
from .lines import RuledLineClaims, SurfaceLineClaims
from .membership import MembershipClaims
from .naturality import NaturalityClaims
from .numerology import NumerologyClaims
from .options import RunOptions
from .planes import PlaneClaims
from .printed import PrintedClaims
from .reference import ReferenceClaims
from .smoothness import SmoothnessClaims
from .symplectic import SymplecticClaims

# report order
CLAIM_CONTROLLERS: List[Type[BaseClaimController]] = [
    DimensionClaims,
    SymplecticClaims,
    FixedLocusClaims,
    MembershipClaims,
    NaturalityClaims,
    GroupClaims,
    SmoothnessClaims,
    PlaneClaims,
    RuledLineClaims,
    SurfaceLineClaims,
    LatticeClaims,
    NumerologyClaims,
    ReferenceClaims,
    PrintedClaims,
]

GROUP_NAMES = tuple(controller.group for controller in CLAIM_CONTROLLERS)


def select_controllers(options: RunOptions) -> List[Type[BaseClaimController]]:
    """Controllers left after --only and --skip, in report order"""
    unknown = [group for group in options.skip_groups + [options.only_group] if group and group not in GROUP_NAMES]
    if unknown:
        raise UnknownClaimGroupError(unknown, GROUP_NAMES)

    selected = []
    for controller in CLAIM_CONTROLLERS:
        if options.only_group is not None and controller.group != options.only_group:
            continue
        if controller.group in options.skip_groups:
            continue
        selected.append(controller)
    return selected


def run_claims(options: RunOptions) -> List[ClaimRecord]:
    """Runs the selected groups one after another; the records keep the registry order"""
    records: List[ClaimRecord] = []
    for controller in select_controllers(options):
        logging.info(f'running the {controller.group} claims')
        records.extend(controller.run(options))
    return records
