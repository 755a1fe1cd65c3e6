# Files within this path, contain the signatures, terms and formulas of affine integration logic,
# together with the syntactic calculus (free variables, substitution, Lipschitz constants and bounds).

from .signature import Signature, FunctionSymbol, RelationSymbol, EMPTY_SIGNATURE, METRIC_SYMBOL
from .terms import Term, Var, Const, App, term_vars, term_substitute, check_term
from .formulas import Formula, One, Rel, Dist, Add, Scale, Quantifier, Inf, Sup, Int, Condition, ONE, ZERO, \
    numeral, numeral_value, free_vars, substitute, is_substitutable, alpha_normalize, collapse_zero, normal_form, \
    depth, check_formula, sum_of, tuple_distance
from .lipschitz import term_lipschitz, formula_lipschitz_bound
from .enumeration import FormulaEnumerator, enumerate_formulas, enumerate_terms, DEFAULT_SCALARS
from .generator import random_term, random_formula, random_sentence

__all__ = [
    'Signature', 'FunctionSymbol', 'RelationSymbol', 'EMPTY_SIGNATURE', 'METRIC_SYMBOL', 'Term', 'Var', 'Const',
    'App', 'term_vars', 'term_substitute', 'check_term', 'Formula', 'One', 'Rel', 'Dist', 'Add', 'Scale',
    'Quantifier', 'Inf', 'Sup', 'Int', 'Condition', 'ONE', 'ZERO', 'numeral', 'numeral_value', 'free_vars',
    'substitute', 'is_substitutable', 'alpha_normalize', 'collapse_zero', 'normal_form', 'depth', 'check_formula',
    'sum_of', 'tuple_distance', 'term_lipschitz', 'formula_lipschitz_bound', 'FormulaEnumerator',
    'enumerate_formulas', 'enumerate_terms', 'DEFAULT_SCALARS', 'random_term', 'random_formula', 'random_sentence'
]
