"""Tests for the claim record transformers"""
from unittest import TestCase, main

from cubicfold.claims.transformers import NoteCleanerTransformer, StatusTransformer


class TestStatusTransformer(TestCase):
    """Tests for the StatusTransformer"""

    def test_run(self):
        """
        should turn holds and provenance into a status
        """
        cases = [
            ({'holds': True, 'provenance': 'printed'}, 'match'),
            ({'holds': True, 'provenance': 'derived'}, 'match'),
            ({'holds': True, 'provenance': 'repaired'}, 'repaired-match'),
            ({'holds': False, 'provenance': 'repaired'}, 'mismatch'),
            ({'holds': None, 'provenance': 'printed'}, 'unverifiable'),
            ({}, 'unverifiable'),
        ]
        for input_data, status in cases:
            with self.subTest(input_data=input_data):
                output = StatusTransformer.run({'claim_id': 'X', **input_data})
                self.assertDictEqual(output, {'claim_id': 'X', 'status': status})

    def test_existing_status(self):
        """
        should leave an explicit status alone
        """
        output = StatusTransformer.run({'holds': False, 'status': 'unverifiable'})
        self.assertDictEqual(output, {'status': 'unverifiable'})


class TestNoteCleanerTransformer(TestCase):
    """Tests for the NoteCleanerTransformer"""

    def test_run(self):
        """
        should strip notes and drop empty and repeated ones
        """
        input_data = {'claim_id': 'X', 'notes': ['  first ', '', 'second', 'first', '   ']}
        self.assertDictEqual(NoteCleanerTransformer.run(input_data), {'claim_id': 'X', 'notes': ['first', 'second']})
        self.assertDictEqual(NoteCleanerTransformer.run({'claim_id': 'X'}), {'claim_id': 'X', 'notes': []})


if __name__ == '__main__':
    main()
