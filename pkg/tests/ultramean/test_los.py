import itertools
import unittest
from fractions import Fraction

import numpy as np

from affinelogic.parser import parse_formula
from affinelogic.semantics import random_structure, random_weights, structure_catalogue, weight_grid
from affinelogic.syntax import FormulaEnumerator, Signature, enumerate_formulas, free_vars, EMPTY_SIGNATURE
from affinelogic.ultramean import LosChecker, UltrachargeSpace, diagonal_embedding, sample_choices, \
    verify_ultramean_theorem
from tests.utils import two_point

SIG = Signature.build(constants=('c', ), relations={'P': (1, 1)})
SCALARS = (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1))


def families(catalogue, max_factors):
    """Every family of at most ``max_factors`` catalogue structures with every weight vector of the quarter grid."""
    for m in range(1, max_factors + 1):
        for models in itertools.combinations_with_replacement(catalogue, m):
            for weights in weight_grid(m):
                yield UltrachargeSpace(weights), list(models)


class TestExhaustive(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.formulas = FormulaEnumerator(EMPTY_SIGNATURE, scalars=SCALARS).up_to(3, ('x', ))

    def assertHolds(self, ws, models):
        report = LosChecker(EMPTY_SIGNATURE, ws, models).check(self.formulas)
        self.assertEqual(report['max_residual'], 0, (ws.weights, [M.charge.tolist() for M in models]))
        self.assertEqual(report['failures'], [])

    def test_formulas(self):
        self.assertIn(parse_formula(EMPTY_SIGNATURE, "int y. sup z. d(y,z)"), self.formulas)
        self.assertIn(parse_formula(EMPTY_SIGNATURE, "-1 * int y. d(x,y)"), self.formulas)
        self.assertTrue(all(free_vars(phi) <= {'x'} for phi in self.formulas))

    def test_up_to_three_factors(self):
        catalogue = structure_catalogue(max_points=2)
        self.assertEqual(len(catalogue), 4)
        count = 0
        for ws, models in families(catalogue, 3):
            self.assertHolds(ws, models)
            count += 1
        self.assertEqual(count, 4 + 10 * 5 + 20 * 15)

    def test_three_point_powermeans(self):
        catalogue = [M for M in structure_catalogue(max_points=3, distances=(Fraction(1, 2), 1)) if M.size == 3]
        self.assertEqual(len(catalogue), 26)
        for M in catalogue:
            for weights in weight_grid(1) + weight_grid(2):
                self.assertHolds(UltrachargeSpace(weights), [M] * len(weights))


class TestLos(unittest.TestCase):

    def test_random_sweep(self):
        rng = np.random.RandomState(2024)
        formulas = enumerate_formulas(SIG, ('x', ), 2)
        for _ in range(6):
            m = rng.randint(1, 4)
            ws = UltrachargeSpace(random_weights(rng, m))
            models = [random_structure(rng, SIG, max_points=3) for _ in range(m)]
            report = LosChecker(SIG, ws, models).check(formulas)
            self.assertEqual(report['max_residual'], 0)
            self.assertEqual(report['failures'], [])
            self.assertGreater(report['checked'], 0)

    def test_two_variables(self):
        rng = np.random.RandomState(1)
        models = [random_structure(rng, SIG, min_points=2, max_points=3) for _ in range(2)]
        ws = UltrachargeSpace((Fraction(1, 4), Fraction(3, 4)))
        phi = parse_formula(SIG, "sup z. d(x,z) - int z. d(z,y) + P(y)")
        self.assertEqual(verify_ultramean_theorem(SIG, ws, models, phi), 0)
        choices = sample_choices(rng, models, ('x', 'y'), 20)
        self.assertEqual(verify_ultramean_theorem(SIG, ws, models, phi, choices), 0)

    def test_sentence(self):
        ws = UltrachargeSpace((Fraction(1, 2), Fraction(1, 2)))
        phi = parse_formula(EMPTY_SIGNATURE, "int x. sup y. d(x,y)")
        checker = LosChecker(EMPTY_SIGNATURE, ws, [two_point(), two_point(charge=(1, 0))])
        self.assertEqual(checker.residuals(phi).shape, ())
        self.assertEqual(checker.check([phi])['max_residual'], 0)


class TestDiagonal(unittest.TestCase):

    def test_two_point(self):
        ws = UltrachargeSpace((Fraction(1, 2), Fraction(1, 2)))
        report = diagonal_embedding(two_point(), ws, enumerate_formulas(EMPTY_SIGNATURE, ('x', ), 2))
        self.assertEqual(report.mapping, (0, 3))
        self.assertTrue(report.holds)
        self.assertGreater(report.checked, 0)


if __name__ == '__main__':
    unittest.main()
