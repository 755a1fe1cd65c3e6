# Files within this path, contain the concrete syntax of formulas and conditions (lexer, parser and
# printer) and the readers / writers of signatures, structures, weights, theories and proof scripts.

from .lexer import Token, tokenize
from .formula_parser import FormulaParser, parse_formula, parse_condition, parse_term
from .printer import pretty, pretty_term, pretty_condition
from .readers import load_json, parse_signature, dump_signature, parse_structure, dump_structure, parse_weights, \
    dump_weights, parse_theory, parse_formula_list, dump_theory, parse_proof, dump_proof, dump_json, \
    load_signature, load_structure, load_weights, load_theory, load_formulas, load_proof

__all__ = [
    'Token', 'tokenize', 'FormulaParser', 'parse_formula', 'parse_condition', 'parse_term', 'pretty', 'pretty_term',
    'pretty_condition', 'load_json', 'parse_signature', 'dump_signature', 'parse_structure', 'dump_structure',
    'parse_weights', 'dump_weights', 'parse_theory', 'parse_formula_list', 'dump_theory', 'parse_proof', 'dump_proof',
    'dump_json', 'load_signature', 'load_structure', 'load_weights', 'load_theory', 'load_formulas', 'load_proof'
]
