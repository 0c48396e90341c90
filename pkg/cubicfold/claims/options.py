"""Module containing the options that drive a verification run"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, validator

FORMATS = ('json', 'md')


class RunOptions(BaseModel):
    """Options shared by every claim group; `primes` overrides the default primes of the smoothness checks"""
    seed: int = 0
    format: str = 'json'
    primes: List[int] = []
    threads: Optional[int] = None
    as_printed: bool = False
    skip_groups: List[str] = []
    only_group: Optional[str] = None
    budget: Optional[int] = None
    timing: bool = False

    @validator('format')
    def format_must_be_known(cls, value):
        if value not in FORMATS:
            raise ValueError(f'format must be one of {FORMATS}, got {value!r}')
        return value

    @validator('threads')
    def threads_must_be_positive(cls, value):
        if value is not None and value < 1:
            raise ValueError(f'threads must be at least 1, got {value}')
        return value

    @validator('budget')
    def budget_must_be_positive(cls, value):
        if value is not None and value < 1:
            raise ValueError(f'budget must be at least 1, got {value}')
        return value

    def report_summary(self) -> Dict[str, Any]:
        """The options as recorded in a report; output format and timing do not change the records"""
        return self.dict(exclude={'format', 'timing'}, exclude_none=True)
