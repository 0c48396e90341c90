"""Module containing tests for the claim timeout guard"""
import time
from unittest import TestCase, main

from cubicfold.utils.timeouts import ClaimTimeoutError, TimeoutManager


class TestTimeoutManager(TestCase):
    """Tests for the SIGALRM based timeout context manager"""

    def test_timeout(self):
        """
        should raise a ClaimTimeoutError with the given message when the block runs too long
        """
        with self.assertRaises(ClaimTimeoutError) as context:
            with TimeoutManager(1, error_message='too slow'):
                time.sleep(3)

        self.assertEqual(str(context.exception), 'too slow')

    def test_no_timeout(self):
        """
        should let quick blocks and disabled guards finish normally
        """
        with TimeoutManager(2):
            value = sum(range(10))
        self.assertEqual(value, 45)

        with TimeoutManager(None):
            value = 1
        self.assertEqual(value, 1)


if __name__ == '__main__':
    main()
