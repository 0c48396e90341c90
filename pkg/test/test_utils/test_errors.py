"""Module containing tests for the shared errors"""
from unittest import TestCase, main

from cubicfold.utils.errors import BudgetExceededError, CubicfoldError, ensure_within_budget


class TestErrors(TestCase):
    """Tests for the budget guard"""

    def test_ensure_within_budget(self):
        """
        should pass silently when the work fits the budget, including the boundary
        """
        ensure_within_budget('scan', 10, 10)
        ensure_within_budget('scan', 0, 10)

    def test_budget_exceeded(self):
        """
        should raise a BudgetExceededError carrying the requested and allowed work
        """
        with self.assertRaises(BudgetExceededError) as context:
            ensure_within_budget('scan of P^5(F_7)', 19608, 1000)

        self.assertIsInstance(context.exception, CubicfoldError)
        self.assertEqual(context.exception.required, 19608)
        self.assertEqual(context.exception.budget, 1000)
        self.assertIn('scan of P^5(F_7)', str(context.exception))


if __name__ == '__main__':
    main()
