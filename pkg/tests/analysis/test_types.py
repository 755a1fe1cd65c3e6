import unittest
from fractions import Fraction

from affinelogic.analysis import RealizedType, plus_map, realized_type, type_distance, type_table
from affinelogic.common.errors import FamilyMiss, UnboundVariable
from affinelogic.parser import load_signature, load_structure, parse_formula
from affinelogic.syntax import ONE, Add, Const, Dist, Int, Scale, Var, EMPTY_SIGNATURE
from tests.utils import fixture, two_point

x, y, c = Var('x'), Var('y'), Const('c')
FAMILY = [ONE, Dist(x, c), Int('y', Dist(x, y)), Add(Dist(x, c), ONE), Scale(Fraction(1, 2), Dist(x, c))]


class TestRealizedType(unittest.TestCase):

    def test_values(self):
        S = two_point(c=0)
        p, q = realized_type(S, (0, ), FAMILY), realized_type(S, (1, ), FAMILY)
        self.assertEqual((p(Dist(x, c)), p(Int('y', Dist(x, y)))), (0, Fraction(1, 2)))
        self.assertEqual((q(Dist(x, c)), q(Add(Dist(x, c), ONE))), (1, 2))
        self.assertEqual(p(ONE), 1)
        self.assertEqual(p(Int('z', Dist(x, Var('z')))), Fraction(1, 2))
        self.assertEqual(len(p.table()), len(FAMILY))

    def test_linearity_and_positivity(self):
        S = two_point(c=0)
        p = realized_type(S, (1, ), FAMILY)
        self.assertEqual(p.check_linearity(), [])
        self.assertTrue(p.is_positive())
        broken = RealizedType(S, (0, ), ('x', ), (ONE, Add(ONE, ONE)), (Fraction(1), Fraction(3)))
        self.assertEqual(broken.check_linearity(), [Add(ONE, ONE)])
        self.assertFalse(RealizedType(S, (0, ), ('x', ), (ONE, ), (Fraction(2), )).is_positive())
        negative = RealizedType(S, (0, ), ('x', ), (Dist(x, c), ), (Fraction(-1), ))
        self.assertFalse(negative.is_positive())

    def test_lookup_errors(self):
        S = two_point(c=0)
        p = realized_type(S, (0, ), FAMILY)
        with self.assertRaises(FamilyMiss):
            p(Dist(c, c))
        with self.assertRaises(UnboundVariable):
            realized_type(S, (0, ), [Dist(x, y)])

    def test_plus_map(self):
        S = two_point(charge=(Fraction(1, 4), Fraction(3, 4)), c=0)
        p = realized_type(S, (0, ), FAMILY)
        self.assertEqual(plus_map(p, Dist(x, y)), Fraction(3, 4))
        self.assertEqual(plus_map(p, Dist(y, c), extend=True), Fraction(3, 4))
        with self.assertRaises(FamilyMiss):
            plus_map(p, Add(Dist(x, y), ONE))

    def test_pairs(self):
        S = two_point()
        p = realized_type(S, (0, 1), [Dist(Var('x1'), Var('x2')), Int('y', Dist(Var('x1'), y))])
        self.assertEqual(p.variables, ('x1', 'x2'))
        self.assertEqual(p.values, (1, Fraction(1, 2)))


class TestTypeDistance(unittest.TestCase):

    def test_symmetric_points(self):
        S = two_point()
        tuples, keys = type_table(S, 1, 2)
        self.assertEqual(tuples, [(0, ), (1, )])
        self.assertEqual(keys[0], keys[1])
        self.assertEqual(type_distance(S, (0, ), (1, ), 2), 0)

    def test_constant_separates(self):
        sig = load_signature(fixture('constant_c.alsig'))
        S = two_point(c=0)
        self.assertEqual(type_distance(S, (0, ), (1, ), 2, sig), 1)

    def test_bounds(self):
        sig = load_signature(fixture('lipschitz.alsig'))
        S = load_structure(fixture('lipschitz.alstr'), sig)
        for a in range(S.size):
            self.assertEqual(type_distance(S, (a, ), (a, ), 2, sig), 0)
            for b in range(S.size):
                rho = type_distance(S, (a, ), (b, ), 2, sig)
                self.assertEqual(rho, type_distance(S, (b, ), (a, ), 2, sig))
                self.assertLessEqual(rho, S.metric[a, b])
        self.assertEqual(type_distance(S, (0, 1), (0, 1), 1, sig), 0)

    def test_formula_family_from_text(self):
        sig = load_signature(fixture('constant_c.alsig'))
        phi = parse_formula(sig, "sup y. d(x,y) - d(x,c)")
        self.assertEqual(realized_type(two_point(c=0), (1, ), [phi])(phi), 0)


if __name__ == '__main__':
    unittest.main()
