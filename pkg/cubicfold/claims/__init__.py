"""The claim suite: one controller per group of checkable statements"""
from .base import BaseClaimController, CheckOutcome, ClaimCheck
from .errors import UnknownClaimGroupError
from .options import RunOptions
from .registry import CLAIM_CONTROLLERS, GROUP_NAMES, run_claims, select_controllers
