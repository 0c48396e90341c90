"""Module containing the errors raised while selecting claims"""
from typing import Sequence

from ..utils.errors import CubicfoldError


class UnknownClaimGroupError(CubicfoldError, ValueError):
    """Raised when --only or --skip names a group that does not exist"""

    def __init__(self, groups: Sequence[str], known: Sequence[str]):
        self.groups = list(groups)
        self.known = list(known)
        super().__init__(f'unknown claim groups {self.groups}; expected any of {self.known}')
