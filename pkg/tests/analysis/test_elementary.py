import unittest
from fractions import Fraction

from affinelogic.analysis import ElementaryChecker, bounded_elementary_check
from affinelogic.common.errors import BudgetExceeded, SizeMismatch
from affinelogic.parser import load_signature, load_structure
from affinelogic.syntax import Dist, Int, Var, EMPTY_SIGNATURE
from affinelogic.ultramean import UltrachargeSpace, build_powermean, construct_ultramean
from tests.utils import fixture, two_point


class TestElementary(unittest.TestCase):

    def test_identity(self):
        sig = load_signature(fixture('lipschitz.alsig'))
        M = load_structure(fixture('lipschitz.alstr'), sig)
        report = bounded_elementary_check(M, M, [0, 1, 2], 2, sig)
        self.assertTrue(report.holds)
        self.assertEqual(report.checked, report.formulas * 3)
        self.assertTrue(bounded_elementary_check(M, M, [0, 1, 2], 1, sig, arity=2).holds)

    def test_powermean_diagonal(self):
        M = two_point()
        ws = UltrachargeSpace((Fraction(1, 2), Fraction(1, 2)))
        U = construct_ultramean(EMPTY_SIGNATURE, ws, [M, M])
        f = [U.class_of((a, a)) for a in range(M.size)]
        report = bounded_elementary_check(M, U.structure, f, 3)
        self.assertTrue(report.holds, report.violations[:3])
        self.assertEqual(report.depth, 3)

    def test_charge_violation(self):
        M, N = two_point(), two_point(charge=(1, 0))
        report = bounded_elementary_check(M, N, [0, 1], 2)
        self.assertFalse(report.holds)
        phis = {phi for phi, _, _, _ in report.violations}
        self.assertIn(Int('y', Dist(Var('x'), Var('y'))), phis)
        out = report.to_dict()
        self.assertFalse(out['holds'])
        self.assertEqual(len(out['violations']), len(report.violations))

    def test_errors(self):
        M = two_point()
        N = build_powermean(EMPTY_SIGNATURE, UltrachargeSpace((Fraction(1, 2), Fraction(1, 2))), M)
        checker = ElementaryChecker(EMPTY_SIGNATURE, 2, budget=10)
        with self.assertRaises(BudgetExceeded):
            checker.check(M, N, [0, 3])
        self.assertTrue(checker.check(M, N, [0, 3], budget=10**4).holds)
        with self.assertRaises(SizeMismatch):
            checker.check(M, N, [0, 4], budget=10**4)
        with self.assertRaises(SizeMismatch):
            checker.check(M, N, [0], budget=10**4)


if __name__ == '__main__':
    unittest.main()
