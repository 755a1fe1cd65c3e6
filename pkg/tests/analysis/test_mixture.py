import os.path as osp
import unittest
from fractions import Fraction

import numpy as np

from affinelogic.analysis import FOURIER_MOTZKIN, SIMPLEX, choose_method, feasible_mixture, fourier_motzkin, \
    simplex_feasible, solve_mixture
from affinelogic.common.errors import Infeasible, OpenCondition
from affinelogic.common.file_utils import STRUCTURE_EXT, list_files
from affinelogic.parser import dump_weights, load_signature, load_structure, load_theory, parse_weights
from affinelogic.semantics import check_condition, eval_formula, random_structure, random_weights
from affinelogic.syntax import Condition, Signature, numeral, random_sentence
from affinelogic.ultramean import UltrachargeSpace, build_ultramean
from tests.utils import fixture


def family():
    sig = load_signature(fixture('constant_c.alsig'))
    models = [load_structure(path, sig) for path in list_files(fixture('models'), STRUCTURE_EXT)]
    return sig, models


def satisfies(gaps, w):
    return all(x >= 0 for x in w) and sum(w) == 1 and \
        all(sum(w[i] * gaps[i][j] for i in range(len(gaps))) >= 0 for j in range(len(gaps[0])))


class TestLinearFeasibility(unittest.TestCase):

    def test_simplex(self):
        x = simplex_feasible([[1, 1, 0], [1, -1, -1]], [1, 0])
        self.assertEqual(x[0] + x[1], 1)
        self.assertGreaterEqual(x[0] - x[1], 0)
        self.assertIsNone(simplex_feasible([[1, 1]], [-1]))

    def test_fourier_motzkin(self):
        # x >= 1/2, y >= x, x + y <= 2
        x = fourier_motzkin([([1, 0], Fraction(-1, 2)), ([-1, 1], 0), ([-1, -1], 2)], 2)
        self.assertGreaterEqual(x[0], Fraction(1, 2))
        self.assertGreaterEqual(x[1], x[0])
        self.assertLessEqual(x[0] + x[1], 2)
        self.assertIsNone(fourier_motzkin([([1], -2), ([-1], 1)], 1))

    def test_methods_agree(self):
        rng = np.random.RandomState(9)
        for _ in range(200):
            m, k = rng.randint(1, 5), rng.randint(1, 5)
            gaps = [[Fraction(int(rng.randint(-3, 3)), 2) for _ in range(k)] for _ in range(m)]
            by_simplex = feasible_mixture(gaps, SIMPLEX)
            by_elimination = feasible_mixture(gaps, FOURIER_MOTZKIN)
            self.assertEqual(by_simplex is None, by_elimination is None, gaps)
            if by_simplex is not None:
                self.assertTrue(satisfies(gaps, by_simplex), gaps)
                self.assertTrue(satisfies(gaps, by_elimination), gaps)

    def test_choose_method(self):
        self.assertEqual(choose_method(4, 4), FOURIER_MOTZKIN)
        self.assertEqual(choose_method(5, 1), SIMPLEX)
        self.assertEqual(choose_method(2, 9), SIMPLEX)


class TestSolveMixture(unittest.TestCase):

    def test_unique_mixture(self):
        sig, models = family()
        self.assertEqual([osp.basename(p) for p in list_files(fixture('models'), STRUCTURE_EXT)],
                         ['m0.alstr', 'm1.alstr'])
        theory = load_theory(fixture('sigma.alth'), sig)
        for method in ('auto', SIMPLEX, FOURIER_MOTZKIN):
            solution = solve_mixture(models, theory, sig, method)
            self.assertEqual(solution.weights.weights, (Fraction(7, 10), Fraction(3, 10)))
            self.assertEqual(solution.margins, (0, 0))
        self.assertEqual(solve_mixture(models, theory, sig).method, FOURIER_MOTZKIN)

    def test_weights_document(self):
        sig, models = family()
        solution = solve_mixture(models, load_theory(fixture('sigma.alth'), sig), sig)
        self.assertEqual(parse_weights(dump_weights(solution.weights)), solution.weights)

    def test_empty_theory(self):
        _, models = family()
        solution = solve_mixture(models, [])
        self.assertEqual(solution.method, 'none')
        self.assertEqual(solution.weights.weights, (Fraction(1, 2), Fraction(1, 2)))

    def test_infeasible(self):
        sig, models = family()
        with self.assertRaises(Infeasible):
            solve_mixture(models, load_theory(fixture('infeasible.alth'), sig), sig)

    def test_open_condition(self):
        sig, models = family()
        with self.assertRaises(OpenCondition):
            solve_mixture(models, load_theory(fixture('two_point.alth'), sig), sig)

    def test_hidden_weights_round_trip(self):
        # the theory is read off the ultramean of hidden weights, so it always has a solution
        sig = Signature.build(constants=('c', ), relations={'P': (1, 1)})
        rng = np.random.RandomState(17)
        for _ in range(60):
            m = rng.randint(1, 4)
            hidden = UltrachargeSpace(random_weights(rng, m))
            models = [random_structure(rng, sig, max_points=3) for _ in range(m)]
            U = build_ultramean(sig, hidden, models)
            theory = []
            for _ in range(rng.randint(1, 4)):
                phi = random_sentence(rng, sig, max_depth=3)
                theory.extend(Condition.equality(phi, numeral(eval_formula(U, phi))))
            for method in (SIMPLEX, FOURIER_MOTZKIN):
                solution = solve_mixture(models, theory, sig, method)
                self.assertEqual(len(solution.margins), len(theory))
                self.assertTrue(all(margin >= 0 for margin in solution.margins), (hidden.weights, solution))
                N = build_ultramean(sig, solution.weights, models)
                for cond in theory:
                    self.assertTrue(check_condition(N, cond)[0], (hidden.weights, solution.weights, cond))


if __name__ == '__main__':
    unittest.main()
