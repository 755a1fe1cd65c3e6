import unittest
from fractions import Fraction

from affinelogic.analysis import witnesses
from affinelogic.common.errors import UnboundVariable
from affinelogic.parser import parse_formula
from affinelogic.semantics import discrete_structure
from affinelogic.syntax import ONE, Dist, Var, EMPTY_SIGNATURE
from tests.utils import two_point


class TestWitnesses(unittest.TestCase):

    def test_no_mean_value_point(self):
        report = witnesses(two_point(), Dist(Var('x'), Var('z')), env={'z': 0})
        self.assertEqual(report.values, (0, 1))
        self.assertEqual((report.inf, report.sup, report.mean), (0, 1, Fraction(1, 2)))
        self.assertEqual((report.inf_witnesses, report.sup_witnesses), ((0, ), (1, )))
        self.assertFalse(report.has_mean_value)

    def test_mean_value_point(self):
        S = discrete_structure(3)
        phi = parse_formula(EMPTY_SIGNATURE, "d(x,z) + d(x,w)")
        report = witnesses(S, phi, env={'z': 0, 'w': 1})
        self.assertEqual(report.values, (1, 1, 2))
        self.assertEqual(report.mean, Fraction(4, 3))
        self.assertEqual(report.sup_witnesses, (2, ))
        report = witnesses(S, ONE)
        self.assertEqual(report.mean_points, (0, 1, 2))
        self.assertTrue(report.has_mean_value)
        self.assertEqual(report.to_dict()['mean_points'], [0, 1, 2])

    def test_other_variable(self):
        report = witnesses(two_point(charge=(Fraction(1, 4), Fraction(3, 4))), Dist(Var('y'), Var('x')), 'y', {'x': 1})
        self.assertEqual(report.var, 'y')
        self.assertEqual(report.mean, Fraction(1, 4))
        self.assertEqual(report.inf_witnesses, (1, ))

    def test_unbound(self):
        with self.assertRaises(UnboundVariable):
            witnesses(two_point(), Dist(Var('x'), Var('z')))


if __name__ == '__main__':
    unittest.main()
