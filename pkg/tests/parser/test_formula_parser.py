import unittest
from fractions import Fraction

import numpy as np

from affinelogic.common.errors import ALSyntaxError, ArityMismatch, UnknownSymbol
from affinelogic.parser import parse_condition, parse_formula, parse_term, pretty, pretty_condition, tokenize
from affinelogic.syntax import ONE, ZERO, Add, App, Condition, Const, Dist, Int, Rel, Scale, Signature, Sup, Var, \
    random_formula, EMPTY_SIGNATURE

x, y = Var('x'), Var('y')
SIG = Signature.build(constants=('c', ), functions={'f': (1, 1)}, relations={'P': (1, 1)})


def parse(text, sig=EMPTY_SIGNATURE):
    return parse_formula(sig, text)


class TestGrammar(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(parse("int y. d(x,y)"), Int('y', Dist(x, y)))
        self.assertEqual(parse("1/2 * d(x,y) + 1"), Add(Scale(Fraction(1, 2), Dist(x, y)), ONE))
        self.assertEqual(parse("sup y. d(x,y) + 1"), Sup('y', Add(Dist(x, y), ONE)))
        self.assertEqual(parse("(sup y. d(x,y)) + 1"), Add(Sup('y', Dist(x, y)), ONE))

    def test_numerals_and_minus(self):
        self.assertEqual(parse("1"), ONE)
        self.assertEqual(parse("0"), ZERO)
        self.assertEqual(parse("0.25"), Scale(Fraction(1, 4), ONE))
        self.assertEqual(parse("-1"), Scale(-1, ONE))
        self.assertEqual(parse("-d(x,y)"), Scale(-1, Dist(x, y)))
        self.assertEqual(parse("d(x,y) - 1"), Add(Dist(x, y), Scale(-1, ONE)))
        self.assertEqual(parse("-1/2 * d(x,x)"), Scale(Fraction(-1, 2), Dist(x, x)))

    def test_symbols(self):
        self.assertEqual(parse("P(f(c))", SIG), Rel('P', (App('f', (Const('c'), )), )))
        self.assertEqual(parse_term(SIG, "f(f(x))"), App('f', (App('f', (x, )), )))

    def test_conditions(self):
        self.assertEqual(parse_condition(EMPTY_SIGNATURE, "d(x,y) <= 1"), [Condition(Dist(x, y), ONE)])
        self.assertEqual(parse_condition(EMPTY_SIGNATURE, "d(x,y) = d(y,x)"),
                         Condition.equality(Dist(x, y), Dist(y, x)))


class TestErrors(unittest.TestCase):

    def test_syntax_error_position(self):
        with self.assertRaises(ALSyntaxError) as cm:
            parse("d(x,y")
        self.assertEqual((cm.exception.span.line, cm.exception.span.column), (1, 6))
        with self.assertRaises(ALSyntaxError):
            tokenize("d(x,y) $ 1")

    def test_bad_formulas(self):
        with self.assertRaises(ArityMismatch):
            parse("d(x)")
        with self.assertRaises(UnknownSymbol):
            parse("Q(x)")
        with self.assertRaises(ALSyntaxError):
            parse("x")
        with self.assertRaises(ALSyntaxError):
            parse("inf d. 1")
        with self.assertRaises(ALSyntaxError):
            parse("sup c. 1", SIG)
        with self.assertRaises(ArityMismatch):
            parse("P(f)", SIG)
        with self.assertRaises(ALSyntaxError):
            parse_condition(EMPTY_SIGNATURE, "1 <= 1 <= 1")


class TestPrinter(unittest.TestCase):

    def test_parentheses(self):
        phi = Add(Sup('y', Dist(x, y)), Add(ONE, ONE))
        self.assertEqual(pretty(phi), "(sup y. d(x, y)) + (1 + 1)")
        self.assertEqual(pretty(Scale(-1, Add(ONE, Dist(x, x)))), "-1 * (1 + d(x, x))")
        self.assertEqual(pretty_condition(Condition(ZERO, ONE)), "0 * 1 <= 1")

    def test_print_then_parse(self):
        rng = np.random.RandomState(7)
        for _ in range(300):
            phi = random_formula(rng, SIG, ('x', 'y'), max_depth=5)
            self.assertEqual(parse(pretty(phi), SIG), phi)


if __name__ == '__main__':
    unittest.main()
