"""Module containing the transformers applied to every claim record before it is loaded"""
from typing import Any, Dict, List

from ..report.models import MATCH, MISMATCH, REPAIRED_MATCH, UNVERIFIABLE

REPAIRED_PROVENANCE = 'repaired'


class BaseRecordTransformer:
    """The base class for transformers that receive a raw record dictionary and return a transformed one"""

    @classmethod
    def run(cls, data: Dict[str, Any]) -> Dict[str, Any]:
        """This transforms the record"""
        return data


class StatusTransformer(BaseRecordTransformer):
    """
    Turns the outcome of a check into a status: no verdict is unverifiable, a failed check a
    mismatch, and a check that holds on repaired data a repaired-match
    """

    @classmethod
    def run(cls, data: Dict[str, Any]) -> Dict[str, Any]:
        data = dict(data)
        holds = data.pop('holds', None)
        provenance = data.pop('provenance', None)

        if 'status' in data:
            return data
        if holds is None:
            data['status'] = UNVERIFIABLE
        elif not holds:
            data['status'] = MISMATCH
        elif provenance == REPAIRED_PROVENANCE:
            data['status'] = REPAIRED_MATCH
        else:
            data['status'] = MATCH
        return data


class NoteCleanerTransformer(BaseRecordTransformer):
    """Strips notes, drops empty ones and removes repeats while keeping their order"""

    @classmethod
    def run(cls, data: Dict[str, Any]) -> Dict[str, Any]:
        notes: List[str] = []
        for note in data.get('notes', []):
            note = str(note).strip()
            if note and note not in notes:
                notes.append(note)
        return {**data, 'notes': notes}
