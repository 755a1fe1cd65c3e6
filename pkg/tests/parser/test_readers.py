import unittest
from fractions import Fraction

from affinelogic.common.errors import ALSyntaxError, DanglingPremiseId, DimensionMismatch, MalformedBindings, \
    SchemaError, UnknownAxiomName
from affinelogic.parser import dump_json, dump_proof, dump_structure, dump_theory, dump_weights, load_formulas, \
    load_signature, load_structure, load_theory, load_weights, parse_proof, parse_signature, parse_structure, \
    parse_theory, parse_weights
from affinelogic.parser import load_proof
from affinelogic.proof import AxiomRef, Hyp, RuleRef, fixture_path
from affinelogic.syntax import Int, Dist, Var, EMPTY_SIGNATURE
from tests.utils import assert_fractions_equal, fixture


class TestStructures(unittest.TestCase):

    def test_two_point(self):
        S = load_structure(fixture('two_point.alstr'))
        self.assertEqual(S.points, ('0', '1'))
        assert_fractions_equal(self, S.metric, [[0, 1], [1, 0]])
        assert_fractions_equal(self, S.charge, ['1/2', '1/2'])
        self.assertIsInstance(S.charge[0], Fraction)

    def test_symbols(self):
        sig = load_signature(fixture('lipschitz.alsig'))
        self.assertEqual(sig.relation('P').lipschitz, Fraction(1, 2))
        S = load_structure(fixture('lipschitz.alstr'), sig)
        self.assertEqual(S.constants, {'c': 0})
        self.assertEqual(S.functions['f'].tolist(), [0, 0, 1])
        assert_fractions_equal(self, S.relations['P'], [0, '1/4', '1/2'])

    def test_dump(self):
        sig = load_signature(fixture('lipschitz.alsig'))
        S = load_structure(fixture('lipschitz.alstr'), sig)
        text = dump_structure(S)
        self.assertEqual(parse_structure(sig, text), S)
        self.assertEqual(text, dump_structure(parse_structure(sig, text)))

    def test_errors(self):
        with self.assertRaises(ALSyntaxError):
            load_structure(fixture('broken.alstr'))
        with self.assertRaises(DimensionMismatch):
            load_structure(fixture('wrong_shape.alstr'))
        with self.assertRaises(SchemaError):
            load_structure(fixture('two_point.alth'))
        with self.assertRaises(SchemaError):
            parse_structure(EMPTY_SIGNATURE, '{"points": ["a"], "metric": [["0"]], "charge": ["1"], "colour": 1}')
        with self.assertRaises(SchemaError):
            parse_structure(EMPTY_SIGNATURE, '{"points": ["a"], "metric": [["0"]]}')
        sig = parse_signature('{"relations": [{"name": "P", "arity": 1}]}')
        with self.assertRaises(DimensionMismatch):
            parse_structure(sig, '{"points": ["a"], "metric": [["0"]], "charge": ["1"], "relations": {"P": [["0"]]}}')
        with self.assertRaises(ALSyntaxError):
            parse_structure(EMPTY_SIGNATURE, '{"points": ["a"], "metric": [["zero"]], "charge": ["1"]}')


class TestWeightsAndTheories(unittest.TestCase):

    def test_weights(self):
        ws = load_weights(fixture('half.alw'))
        self.assertEqual(ws.weights, (Fraction(1, 2), Fraction(1, 2)))
        self.assertEqual(dump_weights(ws), '[\n  "1/2",\n  "1/2"\n]\n')
        with self.assertRaises(SchemaError):
            parse_weights('["1/2", "1/4"]')
        with self.assertRaises(SchemaError):
            parse_weights('["3/2", "-1/2"]')

    def test_theory(self):
        theory = load_theory(fixture('two_point.alth'))
        self.assertEqual(len(theory), 3)
        self.assertEqual(theory[0].lhs, Int('y', Dist(Var('x'), Var('y'))))
        self.assertEqual(parse_theory(EMPTY_SIGNATURE, dump_theory(theory)), theory)

    def test_theory_error_line(self):
        with self.assertRaises(ALSyntaxError) as cm:
            parse_theory(EMPTY_SIGNATURE, "# header\n1 <= 1\nd(x,y <= 1\n", 'bad.alth')
        self.assertEqual(cm.exception.span.line, 3)
        self.assertEqual(cm.exception.span.file, 'bad.alth')

    def test_formulas(self):
        formulas = load_formulas(fixture('small.alf'))
        self.assertEqual(len(formulas), 5)


PROOF = '''{
  "hypotheses": ["d(x,y) <= 1/2"],
  "steps": [
    {"id": "h", "condition": "d(x,y) <= 1/2", "justification": "hyp"},
    {"id": "a", "condition": "1/2 <= 1", "justification": {"axiom": "A1", "bindings": {"r": "1/2", "s": 1}}},
    {"id": "c", "condition": "d(x,y) <= 1", "justification": {"rule": "R1", "premises": ["h", "a"]}}
  ]
}'''


class TestProofs(unittest.TestCase):

    def test_parse(self):
        script = parse_proof(EMPTY_SIGNATURE, PROOF)
        self.assertEqual(len(script), 3)
        self.assertEqual(script.steps[0].justification, Hyp())
        self.assertEqual(script.steps[1].justification, AxiomRef('A1', {'r': Fraction(1, 2), 's': Fraction(1)}))
        self.assertEqual(script.steps[2].justification, RuleRef('R1', ('h', 'a')))

    def test_dump(self):
        script = load_proof(fixture_path('bound_sup_dist.alpf'))
        again = parse_proof(EMPTY_SIGNATURE, dump_proof(script))
        self.assertEqual([s.condition for s in again.steps], [s.condition for s in script.steps])
        self.assertEqual([s.justification for s in again.steps], [s.justification for s in script.steps])

    def test_schema_errors(self):
        with self.assertRaises(SchemaError):
            parse_proof(EMPTY_SIGNATURE, PROOF.replace('"id": "a"', '"id": "h"'))
        with self.assertRaises(DanglingPremiseId):
            parse_proof(EMPTY_SIGNATURE, PROOF.replace('["h", "a"]', '["h", "z"]'))
        with self.assertRaises(UnknownAxiomName):
            parse_proof(EMPTY_SIGNATURE, PROOF.replace('"A1"', '"A99"'))
        with self.assertRaises(SchemaError):
            parse_proof(EMPTY_SIGNATURE, PROOF.replace('"1/2 <= 1"', '"1/2 = 1/2"'))
        with self.assertRaises(SchemaError):
            parse_proof(EMPTY_SIGNATURE, PROOF.replace('"R1"', '"R9"'))
        with self.assertRaises(SchemaError):
            parse_proof(EMPTY_SIGNATURE, PROOF.replace('"hyp"', '"assumption"'))
        with self.assertRaises(MalformedBindings):
            parse_proof(EMPTY_SIGNATURE, PROOF.replace('"r": "1/2"', '"r": ["1/2"]'))


class TestJson(unittest.TestCase):

    def test_canonical(self):
        self.assertEqual(dump_json({'b': Fraction(1, 2), 'a': [2]}), dump_json({'a': [2], 'b': '1/2'}))
        self.assertEqual(dump_json({'b': 1, 'a': 2}), '{\n  "a": 2,\n  "b": 1\n}\n')


if __name__ == '__main__':
    unittest.main()
