"""Module containing the base claim controller"""
import logging
import time
from typing import Any, Callable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Type

from ..report.models import ClaimRecord
from ..utils.config import get_claim_timeout
from ..utils.errors import CubicfoldError
from ..utils.timeouts import ClaimTimeoutError, TimeoutManager
from .options import RunOptions
from .transformers import BaseRecordTransformer, NoteCleanerTransformer, StatusTransformer


class CheckOutcome(NamedTuple):
    """What a check computed and whether that confirms the claim; `holds` is None when no verdict is possible"""
    computed: Any
    holds: Optional[bool]
    provenance: str = 'printed'
    notes: Tuple[str, ...] = ()


class ClaimCheck(NamedTuple):
    claim_id: str
    location: str
    expected: Any
    check: Callable[[], CheckOutcome]


class BaseClaimController:
    """
    Class for a group of claims: extract yields the checks, transform runs one check
    into a record and load adds the record to the report being assembled
    """
    group: str
    transformer_classes: List[Type[BaseRecordTransformer]] = [StatusTransformer, NoteCleanerTransformer]
    # exceptions
    _known_check_exceptions: Tuple[Type[BaseException], ...] = (CubicfoldError,)
    _fatal_check_exceptions: Tuple[Type[BaseException], ...] = (ClaimTimeoutError, KeyboardInterrupt)

    @classmethod
    def extract(cls, options: RunOptions) -> Iterator[ClaimCheck]:
        """Yields the checks of this group"""
        raise NotImplementedError('Implement the extract method')

    @classmethod
    def transform(cls, claim: ClaimCheck, options: RunOptions) -> ClaimRecord:
        """Runs the check under the claim timeout and turns its outcome into a record"""
        data = dict(claim_id=claim.claim_id, group=cls.group, location=claim.location, expected=claim.expected)
        start = time.perf_counter()

        try:
            with TimeoutManager(get_claim_timeout(), f'{claim.claim_id} ran out of time'):
                outcome = claim.check()
            data.update(computed=outcome.computed, holds=outcome.holds, provenance=outcome.provenance,
                        notes=list(outcome.notes))
        except cls._fatal_check_exceptions as exp:
            raise exp
        except cls._known_check_exceptions as exp:
            logging.error(f'{claim.claim_id} Check \n{exp}')
            data.update(holds=None, notes=[f'{type(exp).__name__}: {exp}'])
        except Exception as unknown_exception:
            logging.exception(f'[Unknown] {claim.claim_id} Check')
            data.update(holds=False, notes=[f'internal error: {type(unknown_exception).__name__}: '
                                            f'{unknown_exception}'])

        if options.timing:
            data['wall_time'] = round(time.perf_counter() - start, 3)

        for transformer in cls.transformer_classes:
            data = transformer.run(data=data)
        return ClaimRecord(**data)

    @classmethod
    def load(cls, record: ClaimRecord, records: List[ClaimRecord]) -> None:
        """Adds the record to the list being assembled"""
        records.append(record)

    @classmethod
    def run(cls, options: RunOptions) -> List[ClaimRecord]:
        records: List[ClaimRecord] = []
        for claim in cls.extract(options):
            cls.load(cls.transform(claim, options), records)
        return records


def claim(claim_id: str, location: str, expected: Any, check: Callable[[], CheckOutcome]) -> ClaimCheck:
    return ClaimCheck(claim_id, location, expected, check)


def outcome(computed: Any, holds: Optional[bool], provenance: str = 'printed',
            notes: Sequence[str] = ()) -> CheckOutcome:
    return CheckOutcome(computed, holds, provenance, tuple(notes))


def claim_suffix(name: str) -> str:
    """Catalog name as used inside claim ids, e.g. F6a -> F6A"""
    return name.upper()
