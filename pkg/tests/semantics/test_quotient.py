import unittest
from fractions import Fraction

import numpy as np

from affinelogic.common.errors import IllDefinedQuotient
from affinelogic.parser import parse_formula
from affinelogic.semantics import DisjointSet, FiniteChargedStructure, ValueTables, eval_formula, quotient_map, \
    quotient_structure, validate_structure
from affinelogic.syntax import Signature, random_formula
from tests.utils import assert_fractions_equal, two_point

SIG = Signature.build(functions={'f': (1, 1)}, relations={'P': (1, 1)})


def prestructure(P=('1/2', '1/2', 1), f=(2, 2, 0)):
    metric = [[0, 0, 1], [0, 0, 1], [1, 1, 0]]
    return FiniteChargedStructure('abc', metric, ['1/4', '1/4', '1/2'], functions={'f': list(f)},
                                  relations={'P': list(P)})


class TestDisjointSet(unittest.TestCase):

    def test_classes(self):
        dsu = DisjointSet(5)
        dsu.union(3, 1)
        dsu.union(4, 3)
        self.assertEqual(dsu.classes(), [[0], [1, 3, 4], [2]])
        self.assertEqual(dsu.find(4), 1)
        dsu.union(2, 0)
        self.assertEqual(dsu.find(2), 0)


class TestQuotient(unittest.TestCase):

    def test_merge(self):
        P = prestructure()
        self.assertEqual(validate_structure(SIG, P, allow_pseudometric=True), [])
        self.assertEqual(quotient_map(P), [0, 0, 1])
        Q = quotient_structure(SIG, P)
        self.assertEqual(Q.points, ('a', 'c'))
        assert_fractions_equal(self, Q.charge, ['1/2', '1/2'])
        assert_fractions_equal(self, Q.metric, [[0, 1], [1, 0]])
        self.assertEqual(Q.functions['f'].tolist(), [1, 0])
        self.assertEqual(validate_structure(SIG, Q), [])

    def test_values_preserved(self):
        P = prestructure()
        Q = quotient_structure(SIG, P)
        projection = quotient_map(P)
        self.assertEqual(eval_formula(Q, parse_formula(SIG, "int x. P(x)", )), Fraction(3, 4))
        rng = np.random.RandomState(5)
        tables_p, tables_q = ValueTables(P), ValueTables(Q)
        for _ in range(40):
            phi = random_formula(rng, SIG, ('x', ), max_depth=4)
            tp, tq = tables_p.table(phi, ('x', )), tables_q.table(phi, ('x', ))
            for a in range(P.size):
                self.assertEqual(tp[a], tq[projection[a]])

    def test_metric_space_unchanged(self):
        S = two_point()
        self.assertIs(quotient_structure(SIG, S), S)

    def test_ill_defined(self):
        with self.assertRaises(IllDefinedQuotient):
            quotient_structure(SIG, prestructure(P=(0, '1/2', 1)))
        with self.assertRaises(IllDefinedQuotient):
            quotient_structure(SIG, prestructure(f=(0, 2, 0)))


if __name__ == '__main__':
    unittest.main()
