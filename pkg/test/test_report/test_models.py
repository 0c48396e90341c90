"""Module containing tests for claim records and reports"""
from fractions import Fraction
from unittest import TestCase, main

from pydantic import ValidationError

from cubicfold.latticelab.discriminants import EquivariantPair
from cubicfold.report.models import ClaimRecord, VerificationReport, to_jsonable


def _record(claim_id: str, status: str, group: str = 'numerology') -> ClaimRecord:
    return ClaimRecord(claim_id=claim_id, group=group, location='somewhere', expected=1, computed=1, status=status)


class TestToJsonable(TestCase):
    """Tests for to_jsonable"""

    def test_values(self):
        """
        should write exact values as integers or strings
        """
        self.assertEqual(to_jsonable(Fraction(4, 2)), 2)
        self.assertEqual(to_jsonable(Fraction(1, 3)), '1/3')
        self.assertEqual(to_jsonable({1: (Fraction(1, 2), None)}), {'1': ['1/2', None]})
        self.assertEqual(to_jsonable(EquivariantPair(4, 2, 42, 14)),
                         {'n': 4, 'm': 2, 'source_discriminant': 42, 'target_discriminant': 14})
        self.assertEqual(to_jsonable({3, 1, 2}), [1, 2, 3])


class TestClaimRecord(TestCase):
    """Tests for ClaimRecord"""

    def test_validation(self):
        """
        should refuse unknown statuses and empty locations
        """
        with self.assertRaises(ValidationError):
            _record('NUM-X', 'maybe')
        with self.assertRaises(ValidationError):
            ClaimRecord(claim_id='NUM-X', group='numerology', location='  ', expected=1, status='match')

    def test_exact_values(self):
        """
        should store expected and computed values as JSON data
        """
        record = ClaimRecord(claim_id='NUM-X', group='numerology', location='here', expected=Fraction(1, 3),
                             computed=(Fraction(2), 'a'), status='match')
        self.assertEqual(record.expected, '1/3')
        self.assertEqual(record.computed, [2, 'a'])


class TestVerificationReport(TestCase):
    """Tests for VerificationReport"""

    def setUp(self) -> None:
        self.report = VerificationReport(tool_version='0.1.0', options={'seed': 0}, catalog_entries=['V1'],
                                         records=[_record('NUM-A', 'match'), _record('NUM-B', 'mismatch'),
                                                  _record('LAT-C', 'unverifiable', group='lattice')])

    def test_counts(self):
        """
        should count every status, zero included
        """
        self.assertDictEqual(self.report.status_counts(),
                             {'match': 1, 'mismatch': 1, 'repaired-match': 0, 'unverifiable': 1})
        self.assertTrue(self.report.has_mismatch())
        self.assertEqual(self.report.exit_code(), 1)

    def test_record_lookup(self):
        """
        should find records by claim id
        """
        self.assertEqual(self.report.record('LAT-C').group, 'lattice')
        with self.assertRaises(KeyError):
            self.report.record('LAT-D')

    def test_as_data(self):
        """
        should leave out unset wall times and timing
        """
        data = self.report.as_data()
        self.assertNotIn('timing', data)
        self.assertNotIn('wall_time', data['records'][0])
        self.assertEqual(data['status_counts']['mismatch'], 1)


if __name__ == '__main__':
    main()
