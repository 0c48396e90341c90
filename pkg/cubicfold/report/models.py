"""Module containing the claim records and the verification report"""
from collections import Counter
from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, validator

MATCH = 'match'
MISMATCH = 'mismatch'
REPAIRED_MATCH = 'repaired-match'
UNVERIFIABLE = 'unverifiable'

STATUSES = (MATCH, MISMATCH, REPAIRED_MATCH, UNVERIFIABLE)


def to_jsonable(value: Any) -> Any:
    """Plain JSON data for exact values, named tuples, models and containers"""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, BaseModel):
        return to_jsonable(value.dict())
    if hasattr(value, '_asdict'):
        return to_jsonable(value._asdict())
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted((to_jsonable(item) for item in value), key=str)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    return str(value)


class ClaimRecord(BaseModel):
    """Outcome of one checked statement; `location` says where the statement comes from"""
    claim_id: str
    group: str
    location: str
    expected: Any
    computed: Any = None
    status: str
    notes: List[str] = []
    wall_time: Optional[float] = None

    @validator('expected', 'computed', pre=True)
    def values_must_be_jsonable(cls, value):
        return to_jsonable(value)

    @validator('status')
    def status_must_be_known(cls, value):
        if value not in STATUSES:
            raise ValueError(f'unknown status {value!r}; expected one of {STATUSES}')
        return value

    @validator('location')
    def location_must_be_given(cls, value):
        if not value.strip():
            raise ValueError('every claim record needs a location')
        return value


class VerificationReport(BaseModel):
    tool_version: str
    options: Dict[str, Any]
    catalog_entries: List[str]
    records: List[ClaimRecord]
    timing: Optional[Dict[str, float]] = None

    def status_counts(self) -> Dict[str, int]:
        counts = Counter(record.status for record in self.records)
        return {status: counts.get(status, 0) for status in STATUSES}

    def has_mismatch(self) -> bool:
        return any(record.status == MISMATCH for record in self.records)

    def exit_code(self) -> int:
        return 1 if self.has_mismatch() else 0

    def record(self, claim_id: str) -> ClaimRecord:
        for record in self.records:
            if record.claim_id == claim_id:
                return record
        raise KeyError(claim_id)

    def as_data(self) -> Dict[str, Any]:
        """Report contents; wall times only appear when they were recorded"""
        data = self.dict(exclude_none=True)
        data['status_counts'] = self.status_counts()
        return data
