import unittest
from fractions import Fraction

import numpy as np

from affinelogic.common.errors import UnboundVariable
from affinelogic.parser import parse_condition, parse_formula
from affinelogic.semantics import FiniteChargedStructure, ValueTables, check_condition, environments, eval_formula, \
    eval_term, evaluate, random_structure, unit_interval_grid, value_table
from affinelogic.syntax import App, Const, Dist, Int, Signature, Var, random_formula, EMPTY_SIGNATURE
from tests.utils import two_point

x, y = Var('x'), Var('y')
MEAN_DISTANCE = Int('y', Dist(x, y))


class TestTwoPoint(unittest.TestCase):

    def test_values(self):
        S = two_point()
        self.assertEqual(eval_formula(S, MEAN_DISTANCE, {'x': 0}), Fraction(1, 2))
        self.assertEqual(eval_formula(S, parse_formula(EMPTY_SIGNATURE, "sup y. d(x,y)"), {'x': 1}), 1)
        self.assertEqual(eval_formula(S, parse_formula(EMPTY_SIGNATURE, "inf y. d(x,y)"), {'x': 1}), 0)
        phi = parse_formula(EMPTY_SIGNATURE, "int x. int y. 2 * d(x,y) - 1/2")
        self.assertEqual(eval_formula(S, phi), Fraction(1, 2))

    def test_skewed_charge(self):
        S = two_point(charge=(Fraction(1, 4), Fraction(3, 4)))
        self.assertEqual(eval_formula(S, MEAN_DISTANCE, {'x': 0}), Fraction(3, 4))
        self.assertEqual(eval_formula(S, MEAN_DISTANCE, {'x': 1}), Fraction(1, 4))

    def test_terms(self):
        S = FiniteChargedStructure(['a', 'b'], [[0, 1], [1, 0]], ['1/2', '1/2'], constants={'c': 0},
                                   functions={'f': [1, 0], 'g': [[0, 0], [0, 1]]})
        self.assertEqual(eval_term(S, x, {'x': 1}), 1)
        self.assertEqual(eval_term(S, Const('c'), {}), 0)
        self.assertEqual(eval_term(S, App('f', (Const('c'), )), {}), 1)
        self.assertEqual(eval_term(S, App('g', (x, App('f', (x, )))), {'x': 0}), 0)
        self.assertEqual(eval_term(S, App('g', (x, App('f', (Const('c'), )))), {'x': 1}), 1)
        with self.assertRaises(UnboundVariable):
            eval_term(S, App('f', (y, )), {'x': 0})

    def test_unbound(self):
        with self.assertRaises(UnboundVariable):
            eval_formula(two_point(), Dist(x, y), {'x': 0})
        with self.assertRaises(UnboundVariable):
            value_table(two_point(), Dist(x, y), ('x', ))

    def test_trace(self):
        report = evaluate(two_point(), MEAN_DISTANCE, {'x': 0}, trace=True, sig=EMPTY_SIGNATURE)
        self.assertEqual(report.value, Fraction(1, 2))
        self.assertEqual(report.bound, 1)
        self.assertTrue(report.exact)
        self.assertEqual(len(report.trace), 3)
        self.assertEqual(report.trace[-1].formula, MEAN_DISTANCE)
        self.assertEqual([e.value for e in report.trace[:2]], [0, 1])
        self.assertIsNone(evaluate(two_point(), MEAN_DISTANCE, {'x': 0}).trace)

    def test_conditions(self):
        S = two_point()
        holds, margin = check_condition(S, parse_condition(EMPTY_SIGNATURE, "d(x,y) <= 1")[0])
        self.assertTrue(holds)
        self.assertEqual(margin, 0)
        holds, margin = check_condition(S, parse_condition(EMPTY_SIGNATURE, "int y. d(x,y) <= 1/4")[0])
        self.assertFalse(holds)
        self.assertEqual(margin, Fraction(-1, 4))


class TestTables(unittest.TestCase):

    def test_tables_agree_with_pointwise(self):
        sig = Signature.build(constants=('c', ), functions={'f': (1, 1)}, relations={'P': (1, 1), 'Q': (2, 1)})
        rng = np.random.RandomState(11)
        for _ in range(30):
            S = random_structure(rng, sig, max_points=3)
            tables = ValueTables(S)
            for _ in range(10):
                phi = random_formula(rng, sig, ('x', 'y'), max_depth=4)
                table = tables.table(phi, ('x', 'y'))
                for env in environments(S, ('x', 'y')):
                    self.assertEqual(table[env['x'], env['y']], eval_formula(S, phi, env))

    def test_sentence_table(self):
        self.assertEqual(value_table(two_point(), Int('x', MEAN_DISTANCE), ()).shape, ())


class TestGrid(unittest.TestCase):

    @staticmethod
    def mean_distance(t):
        return (t * t + (1 - t) * (1 - t)) / 2

    def test_exact_grid(self):
        n = 100
        S = unit_interval_grid(n)
        values = value_table(S, MEAN_DISTANCE, ('x', ))
        for k in range(n):
            t = Fraction(k, n - 1)
            error = values[k] - self.mean_distance(t)
            self.assertEqual(error, t * (1 - t) / n)
            self.assertLessEqual(error, Fraction(1, 100))

    def test_float_grid_converges(self):
        errors = []
        for n in (100, 1000):
            S = unit_interval_grid(n, exact=False)
            values = value_table(S, MEAN_DISTANCE, ('x', ))
            t = np.linspace(0.0, 1.0, n)
            errors.append(np.abs(values - self.mean_distance(t)).max())
        self.assertLessEqual(errors[0], 1 / 100)
        self.assertGreaterEqual(errors[0] / errors[1], 5)

    def test_float_report(self):
        report = evaluate(unit_interval_grid(11, exact=False), MEAN_DISTANCE, {'x': 0}, tolerance=1e-9)
        self.assertFalse(report.exact)
        self.assertEqual(report.tolerance, 1e-9)
        self.assertAlmostEqual(report.value, 0.5)

    def test_tolerance_on_exact_grid(self):
        with self.assertWarns(UserWarning):
            report = evaluate(unit_interval_grid(11), MEAN_DISTANCE, {'x': 0}, tolerance=1e-9)
        self.assertTrue(report.exact)
        self.assertIsNone(report.tolerance)
        self.assertEqual(report.value, Fraction(1, 2))


if __name__ == '__main__':
    unittest.main()
