"""Module containing tests for the claim registry and the run options"""
from unittest import TestCase, main
from unittest.mock import patch

from pydantic import ValidationError

from cubicfold.claims.dimensions import DimensionClaims
from cubicfold.claims.errors import UnknownClaimGroupError
from cubicfold.claims.numerology import NumerologyClaims
from cubicfold.claims.options import RunOptions
from cubicfold.claims.registry import CLAIM_CONTROLLERS, GROUP_NAMES, run_claims, select_controllers


class TestSelectControllers(TestCase):
    """Tests for select_controllers"""

    def test_all(self):
        """
        should keep every group in report order by default
        """
        self.assertListEqual(select_controllers(RunOptions()), CLAIM_CONTROLLERS)
        self.assertEqual(len(set(GROUP_NAMES)), len(GROUP_NAMES))

    def test_only_and_skip(self):
        """
        should honour --only and --skip
        """
        self.assertListEqual(select_controllers(RunOptions(only_group='numerology')), [NumerologyClaims])
        selected = select_controllers(RunOptions(skip_groups=['smoothness', 'planes']))
        self.assertNotIn('smoothness', [c.group for c in selected])
        self.assertEqual(len(selected), len(CLAIM_CONTROLLERS) - 2)
        self.assertListEqual(select_controllers(RunOptions(only_group='dimensions', skip_groups=['dimensions'])), [])

    def test_unknown_group(self):
        """
        should raise UnknownClaimGroupError naming the unknown groups
        """
        with self.assertRaises(UnknownClaimGroupError) as context:
            select_controllers(RunOptions(skip_groups=['smoothnes']))
        self.assertListEqual(context.exception.groups, ['smoothnes'])

    def test_run_order(self):
        """
        should concatenate the records in registry order
        """
        with patch.object(DimensionClaims, 'run', return_value=['a']) as mock_dimensions, \
                patch.object(NumerologyClaims, 'run', return_value=['b', 'c']):
            records = run_claims(RunOptions(skip_groups=[g for g in GROUP_NAMES
                                                         if g not in ('dimensions', 'numerology')]))
        self.assertListEqual(records, ['a', 'b', 'c'])
        mock_dimensions.assert_called_once()


class TestRunOptions(TestCase):
    """Tests for RunOptions"""

    def test_validation(self):
        """
        should refuse unknown formats and non-positive threads or budgets
        """
        for values in ({'format': 'xml'}, {'threads': 0}, {'budget': 0}):
            with self.subTest(values=values):
                with self.assertRaises(ValidationError):
                    RunOptions(**values)

    def test_report_summary(self):
        """
        should leave out the output format, timing and unset values
        """
        summary = RunOptions(seed=3, format='md', timing=True).report_summary()
        self.assertDictEqual(summary, {'seed': 3, 'primes': [], 'as_printed': False, 'skip_groups': []})


if __name__ == '__main__':
    main()
