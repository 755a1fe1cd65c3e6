import unittest
from fractions import Fraction

import numpy as np

from affinelogic.analysis import FubiniChecker, check_fubini, check_permutations, iterated_charge, nest_integrals, \
    product_charge
from affinelogic.parser import parse_formula
from affinelogic.semantics import eval_formula, random_structure
from affinelogic.syntax import ONE, Dist, Int, Signature, Var, random_formula, EMPTY_SIGNATURE
from tests.utils import assert_fractions_equal, two_point

x1, x2 = Var('x1'), Var('x2')
SIG = Signature.build(constants=('c', ), relations={'P': (1, 1), 'Q': (2, 1)})


class TestIteratedCharge(unittest.TestCase):

    def test_product_charge(self):
        S = two_point(charge=(Fraction(1, 4), Fraction(3, 4)))
        assert_fractions_equal(self, product_charge(S, 2), [['1/16', '3/16'], ['3/16', '9/16']])
        self.assertEqual(product_charge(S, 3).sum(), 1)

    def test_values(self):
        S = two_point()
        self.assertEqual(iterated_charge(S, ONE), 1)
        self.assertEqual(iterated_charge(S, ONE, ('x1', 'x2')), 1)
        self.assertEqual(iterated_charge(S, Dist(x1, x2)), Fraction(1, 2))
        skewed = two_point(charge=(Fraction(1, 4), Fraction(3, 4)))
        self.assertEqual(iterated_charge(skewed, Dist(x1, x2)), Fraction(3, 8))

    def test_matches_nested_integrals(self):
        rng = np.random.RandomState(21)
        for _ in range(20):
            S = random_structure(rng, SIG, max_points=3)
            phi = random_formula(rng, SIG, ('x', 'y'), max_depth=3)
            self.assertEqual(iterated_charge(S, phi, ('x', 'y')), eval_formula(S, nest_integrals(phi, ('x', 'y'))))

    def test_nest_integrals(self):
        self.assertEqual(nest_integrals(ONE, ('x', 'y')), Int('x', Int('y', ONE)))


class TestFubini(unittest.TestCase):

    def test_two_point(self):
        S = two_point()
        report = check_fubini(S, Dist(Var('x'), Var('y')))
        self.assertEqual(report['max_residual'], 0)
        self.assertEqual(report['xy'][()], Fraction(1, 2))
        self.assertEqual(report['checked'], 1)

    def test_parameters(self):
        S = two_point()
        phi = parse_formula(EMPTY_SIGNATURE, "d(x,z) + d(x,y) + d(y,z)")
        report = check_fubini(S, phi)
        self.assertEqual(report['max_residual'], 0)
        assert_fractions_equal(self, report['xy'], ['3/2', '3/2'])
        report = check_fubini(S, phi, assignments=[{'z': 1}])
        self.assertEqual(report['checked'], 1)

    def test_permutations(self):
        S = two_point(charge=(Fraction(1, 4), Fraction(3, 4)))
        phi = parse_formula(EMPTY_SIGNATURE, "d(x,y) + 1/2 * d(y,z) - sup w. d(x,w)")
        values = check_permutations(S, phi)
        self.assertEqual(len(values), 6)
        self.assertEqual(len(set(values)), 1)
        self.assertEqual(values[0], iterated_charge(S, phi))

    def test_random_sweep(self):
        rng = np.random.RandomState(5)
        cases = []
        for _ in range(30):
            S = random_structure(rng, SIG, max_points=4)
            cases.append((S, random_formula(rng, SIG, ('x', 'y', 'z'), max_depth=4), 'x', 'y'))
        report = FubiniChecker(SIG).check(cases)
        self.assertEqual(report['max_residual'], 0)
        self.assertEqual(report['failures'], [])
        self.assertGreaterEqual(report['checked'], len(cases))

    def test_checker_swaps_the_given_pair(self):
        S = two_point()
        phi = parse_formula(EMPTY_SIGNATURE, "d(x,z) + d(x,y) + d(y,z)")
        report = FubiniChecker().check([(S, phi, 'x', 'y'), (S, phi, 'y', 'z')])
        # one comparison per value of the remaining parameter, two cases of two points each
        self.assertEqual(report['checked'], 4)
        self.assertEqual(report['max_residual'], 0)
        self.assertEqual(FubiniChecker().check([(S, Dist(Var('x'), Var('y')), 'x', 'y')])['checked'], 1)


if __name__ == '__main__':
    unittest.main()
