import unittest
from fractions import Fraction

import numpy as np

from affinelogic.parser import load_signature, load_structure
from affinelogic.semantics import FiniteChargedStructure, random_structure, structure_catalogue, validate_structure, \
    weight_grid
from affinelogic.syntax import Signature, EMPTY_SIGNATURE
from tests.utils import fixture, two_point


def kinds(violations):
    return {v.kind for v in violations}


class TestValidStructures(unittest.TestCase):

    def test_fixtures(self):
        self.assertEqual(validate_structure(EMPTY_SIGNATURE, two_point()), [])
        sig = load_signature(fixture('lipschitz.alsig'))
        self.assertEqual(validate_structure(sig, load_structure(fixture('lipschitz.alstr'), sig)), [])

    def test_random_structures(self):
        sig = Signature.build(constants=('c', ), functions={'f': (1, 1), 'g': (2, Fraction(1, 2))},
                              relations={'P': (1, Fraction(1, 2)), 'Q': (2, 1)})
        rng = np.random.RandomState(3)
        for _ in range(50):
            S = random_structure(rng, sig, max_points=4)
            self.assertEqual(validate_structure(sig, S), [], S)

    def test_catalogue(self):
        self.assertEqual(len(weight_grid(3)), 15)
        self.assertTrue(all(sum(w) == 1 for w in weight_grid(3)))
        self.assertEqual(len(structure_catalogue(max_points=3)), 1 + 3 + 4)
        catalogue = structure_catalogue(max_points=3, distances=(Fraction(1, 4), 1))
        for S in catalogue:
            self.assertEqual(validate_structure(EMPTY_SIGNATURE, S), [], S)
        # d = (1/4, 1/4, 1) breaks the triangle inequality
        metrics = {tuple(sorted(S.metric[a, b] for a in range(3) for b in range(a + 1, 3)))
                   for S in catalogue if S.size == 3}
        self.assertEqual(len(metrics), 3)


class TestViolations(unittest.TestCase):

    def test_asymmetric(self):
        violations = validate_structure(EMPTY_SIGNATURE, load_structure(fixture('asymmetric.alstr')))
        self.assertIn('SymmetryViolation', kinds(violations))
        self.assertEqual(violations[0].axiom, 'A20')

    def test_metric(self):
        S = FiniteChargedStructure('abc', [[0, '1/4', 1], ['1/4', 0, '1/4'], [1, '1/4', '1/2']], ['1/3'] * 3)
        found = kinds(validate_structure(EMPTY_SIGNATURE, S))
        self.assertIn('TriangleViolation', found)
        self.assertIn('ReflexivityViolation', found)
        S = FiniteChargedStructure('ab', [[0, 0], [0, 0]], ['1/2', '1/2'])
        self.assertEqual(kinds(validate_structure(EMPTY_SIGNATURE, S)), {'IdentityViolation'})
        self.assertEqual(validate_structure(EMPTY_SIGNATURE, S, allow_pseudometric=True), [])
        S = FiniteChargedStructure('ab', [[0, 2], [2, 0]], ['1/2', '1/2'])
        self.assertIn('MetricBoundViolation', kinds(validate_structure(EMPTY_SIGNATURE, S)))

    def test_charge(self):
        S = two_point(charge=('1/2', '1/4'))
        self.assertEqual(kinds(validate_structure(EMPTY_SIGNATURE, S)), {'MassViolation'})
        self.assertEqual(validate_structure(EMPTY_SIGNATURE, S, mass_le_one=True), [])
        S = two_point(charge=('3/2', '-1/2'))
        self.assertEqual(kinds(validate_structure(EMPTY_SIGNATURE, S)), {'NegativeCharge'})

    def test_symbols(self):
        sig = load_signature(fixture('lipschitz.alsig'))
        S = load_structure(fixture('lipschitz.alstr'), sig)
        steep = S.replace(relations={'P': [0, '1/2', '1/2']})
        self.assertEqual(kinds(validate_structure(sig, steep)), {'RelationLipschitzViolation'})
        jumpy = S.replace(functions={'f': [0, 2, 1]})
        self.assertEqual(kinds(validate_structure(sig, jumpy)), {'FunctionLipschitzViolation'})
        bare = S.replace(constants={})
        self.assertEqual(kinds(validate_structure(sig, bare)), {'MissingInterpretation'})
        self.assertIn('UndeclaredSymbol', kinds(validate_structure(EMPTY_SIGNATURE, S)))


if __name__ == '__main__':
    unittest.main()
