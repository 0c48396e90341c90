"""Module containing tests for the subcommands of the command line"""
from unittest import TestCase, main
from unittest.mock import MagicMock, patch

from cubicfold.claims.options import RunOptions
from cubicfold.cli.commands import smoothness_certificates


def _certificate(prime: int, smooth: bool = True) -> MagicMock:
    return MagicMock(prime=prime, is_smooth=smooth, seed=None, verdict='smooth' if smooth else 'singular')


@patch('cubicfold.cli.commands.specialization_for')
class TestSmoothnessCertificates(TestCase):
    """Tests for smoothness_certificates"""

    def test_second_prime_by_default(self, mock_specialization_for):
        """
        should follow a smooth certificate with one at a second prime
        """
        first, second = _certificate(7), _certificate(11)
        with patch('cubicfold.cli.commands.certify_smooth', return_value=first), \
                patch('cubicfold.cli.commands.second_certificate', return_value=second) as mock_second:
            certificates = smoothness_certificates('Fermat', RunOptions())

        self.assertEqual(certificates, [first, second])
        mock_second.assert_called_once()
        self.assertIs(mock_second.call_args[0][1], first)

    def test_no_second_prime_available(self, mock_specialization_for):
        """
        should keep the single certificate when no affordable second prime exists
        """
        first = _certificate(7)
        with patch('cubicfold.cli.commands.certify_smooth', return_value=first), \
                patch('cubicfold.cli.commands.second_certificate', return_value=None):
            self.assertEqual(smoothness_certificates('Fermat', RunOptions()), [first])

    def test_singular_first_certificate(self, mock_specialization_for):
        """
        should not look for a second prime when the first reduction is not smooth
        """
        first = _certificate(7, smooth=False)
        with patch('cubicfold.cli.commands.certify_smooth', return_value=first), \
                patch('cubicfold.cli.commands.second_certificate') as mock_second:
            self.assertEqual(smoothness_certificates('Fermat', RunOptions()), [first])
        mock_second.assert_not_called()

    def test_explicit_primes(self, mock_specialization_for):
        """
        should issue exactly one certificate per --prime when several are given
        """
        certificates = [_certificate(7), _certificate(13)]
        with patch('cubicfold.cli.commands.certify_smooth', side_effect=certificates), \
                patch('cubicfold.cli.commands.second_certificate') as mock_second:
            self.assertEqual(smoothness_certificates('Fermat', RunOptions(primes=[7, 13])), certificates)
        mock_second.assert_not_called()
        self.assertEqual([c[0][1] for c in mock_specialization_for.call_args_list], [7, 13])

    def test_family_member_seed(self, mock_specialization_for):
        """
        should certify the second prime on the member whose seed was certified first
        """
        first = _certificate(5)
        first.seed = 2
        with patch('cubicfold.cli.commands.certify_generic_member', return_value=first), \
                patch('cubicfold.cli.commands.second_certificate', return_value=_certificate(7)) as mock_second:
            self.assertEqual(len(smoothness_certificates('V2', RunOptions())), 2)

        cubic, _, _, seed = mock_second.call_args[0]
        self.assertEqual(seed, 2)
        self.assertEqual(cubic.name, 'V2')


if __name__ == '__main__':
    main()
