"""The logical axioms as schemas.

A schema declares its metavariables with their kinds, builds the conditions of an instance from
bindings, and states its side condition. Equality axioms ``φ = ψ`` build the two conditions
``φ <= ψ`` and ``ψ <= φ``; a step may cite either one.
"""
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from ..common.errors import MalformedBindings, NotSubstitutable, UnknownAxiom, UnknownSymbol
from ..syntax.formulas import ONE, ZERO, Add, Condition, Dist, Formula, Int, Inf, Rel, Scale, Sup, free_vars, \
    numeral, substitute, sum_of
from ..syntax.signature import EMPTY_SIGNATURE, IDENTIFIER, KEYWORDS, METRIC_SYMBOL, Signature
from ..syntax.terms import App, Term

# metavariable kinds
FORMULA = 'formula'
RATIONAL = 'rational'
VARIABLE = 'variable'
TERM = 'term'
TERMS = 'terms'
FUNCTION = 'function'
RELATION = 'relation'

KINDS = (FORMULA, RATIONAL, VARIABLE, TERM, TERMS, FUNCTION, RELATION)


@dataclass(frozen=True)
class AxiomSchema:
    name: str
    metavariables: tuple
    build: object
    side_condition: object = None
    statement: str = ''

    def kinds(self) -> dict:
        return dict(self.metavariables)


def _eq(lhs, rhs):
    return Condition.equality(lhs, rhs)


def _le(lhs, rhs):
    return [Condition(lhs, rhs)]


def _neg(phi):
    return Scale(-1, phi)


def _function_atoms(sig, b):
    symbol = sig.function(b['F'])
    xs, ys = b['xs'], b['ys']
    if not len(xs) == len(ys) == symbol.arity:
        raise MalformedBindings(f"{symbol.name} takes {symbol.arity} argument(s), got {len(xs)} and {len(ys)}.")
    distance = sum_of(Dist(s, t) for s, t in zip(xs, ys))
    return _le(Dist(App(symbol.name, xs), App(symbol.name, ys)), Scale(symbol.lipschitz, distance))


def _relation_atoms(sig, b):
    if b['R'] == METRIC_SYMBOL:
        raise MalformedBindings("the metric is not a relation symbol of the signature.")
    symbol = sig.relation(b['R'])
    xs, ys = b['xs'], b['ys']
    if not len(xs) == len(ys) == symbol.arity:
        raise MalformedBindings(f"{symbol.name} takes {symbol.arity} argument(s), got {len(xs)} and {len(ys)}.")
    distance = sum_of(Dist(s, t) for s, t in zip(xs, ys))
    return _le(Add(Rel(symbol.name, xs), _neg(Rel(symbol.name, ys))), Scale(symbol.lipschitz, distance))


def _relation_bounds(sig, b):
    xs = b['xs']
    if b['R'] == METRIC_SYMBOL:
        if len(xs) != 2:
            raise MalformedBindings(f"{METRIC_SYMBOL} takes 2 arguments, got {len(xs)}.")
        atom = Dist(*xs)
    else:
        symbol = sig.relation(b['R'])
        if len(xs) != symbol.arity:
            raise MalformedBindings(f"{symbol.name} takes {symbol.arity} argument(s), got {len(xs)}.")
        atom = Rel(symbol.name, xs)
    return _le(ZERO, atom) + _le(atom, ONE)


def _not_free(var_key, formula_key):

    def side(b):
        if b[var_key] in free_vars(b[formula_key]):
            return f"{b[var_key]} is free in {formula_key}"
        return None

    return side


_P, _Q, _T = ('phi', FORMULA), ('psi', FORMULA), ('theta', FORMULA)
_R, _S = ('r', RATIONAL), ('s', RATIONAL)
_X = ('x', VARIABLE)

AXIOMS = {
    s.name: s
    for s in [
        # linearity
        AxiomSchema('A1', (_R, _S), lambda sig, b: _le(numeral(b['r']), numeral(b['s'])),
                    lambda b: None if b['r'] <= b['s'] else f"{b['r']} <= {b['s']} is false", 'r <= s'),
        AxiomSchema('A2', (_P, _Q, _T),
                    lambda sig, b: _eq(Add(b['phi'], Add(b['psi'], b['theta'])),
                                       Add(Add(b['phi'], b['psi']), b['theta'])),
                    statement='phi + (psi + theta) = (phi + psi) + theta'),
        AxiomSchema('A3', (_P, _Q), lambda sig, b: _eq(Add(b['phi'], b['psi']), Add(b['psi'], b['phi'])),
                    statement='phi + psi = psi + phi'),
        AxiomSchema('A4', (_P, ), lambda sig, b: _eq(Add(ZERO, b['phi']), b['phi']), statement='0 + phi = phi'),
        AxiomSchema('A5', (_R, _P, _Q),
                    lambda sig, b: _eq(Scale(b['r'], Add(b['phi'], b['psi'])),
                                       Add(Scale(b['r'], b['phi']), Scale(b['r'], b['psi']))),
                    statement='r(phi + psi) = r phi + r psi'),
        AxiomSchema('A6', (_R, _S, _P),
                    lambda sig, b: _eq(Scale(b['r'] + b['s'], b['phi']),
                                       Add(Scale(b['r'], b['phi']), Scale(b['s'], b['phi']))),
                    statement='(r + s) phi = r phi + s phi'),
        AxiomSchema('A7', (_R, _S, _P),
                    lambda sig, b: _eq(Scale(b['r'], Scale(b['s'], b['phi'])), Scale(b['r'] * b['s'], b['phi'])),
                    statement='r(s phi) = (rs) phi'),
        AxiomSchema('A8', (_P, ), lambda sig, b: _eq(Scale(1, b['phi']), b['phi']), statement='1 phi = phi'),
        AxiomSchema('A9', (_P, ), lambda sig, b: _eq(Scale(0, b['phi']), ZERO), statement='0 phi = 0'),
        # quantifiers
        AxiomSchema('A10', (_P, _X, ('t', TERM)),
                    lambda sig, b: _le(substitute(b['phi'], b['x'], b['t']), Sup(b['x'], b['phi'])),
                    statement='phi[t/x] <= sup_x phi, t substitutable for x'),
        AxiomSchema('A11', (_X, _P, _Q),
                    lambda sig, b: _eq(Sup(b['x'], Add(b['phi'], b['psi'])), Add(Sup(b['x'], b['phi']), b['psi'])),
                    _not_free('x', 'psi'), 'sup_x (phi + psi) = sup_x phi + psi, x not free in psi'),
        AxiomSchema('A12', (_X, _P, _Q),
                    lambda sig, b: _le(Sup(b['x'], Add(b['phi'], b['psi'])),
                                       Add(Sup(b['x'], b['phi']), Sup(b['x'], b['psi']))),
                    statement='sup_x (phi + psi) <= sup_x phi + sup_x psi'),
        AxiomSchema('A13', (_X, _R, _P),
                    lambda sig, b: _eq(Sup(b['x'], Scale(b['r'], b['phi'])), Scale(b['r'], Sup(b['x'], b['phi']))),
                    lambda b: None if b['r'] >= 0 else f"r = {b['r']} is negative",
                    'sup_x (r phi) = r sup_x phi, r >= 0'),
        AxiomSchema('A14', (_X, _P),
                    lambda sig, b: _eq(Sup(b['x'], b['phi']), _neg(Inf(b['x'], _neg(b['phi'])))),
                    statement='sup_x phi = -inf_x -phi'),
        AxiomSchema('A15', (), lambda sig, b: _eq(Int('x', ONE), ONE), statement='int_x 1 = 1'),
        AxiomSchema('A16', (_X, _P, _Q),
                    lambda sig, b: _eq(Int(b['x'], Add(b['phi'], b['psi'])), Add(Int(b['x'], b['phi']),
                                                                                  Int(b['x'], b['psi']))),
                    statement='int_x (phi + psi) = int_x phi + int_x psi'),
        AxiomSchema('A17', (_X, _R, _P),
                    lambda sig, b: _eq(Int(b['x'], Scale(b['r'], b['phi'])), Scale(b['r'], Int(b['x'], b['phi']))),
                    statement='int_x r phi = r int_x phi'),
        AxiomSchema('A18', (_X, _P), lambda sig, b: _eq(Int(b['x'], b['phi']), b['phi']),
                    _not_free('x', 'phi'), 'int_x phi = phi, x not free in phi'),
        # pseudometric
        AxiomSchema('A19', (('x', TERM), ), lambda sig, b: _eq(Dist(b['x'], b['x']), ZERO), statement='d(x,x) = 0'),
        AxiomSchema('A20', (('x', TERM), ('y', TERM)), lambda sig, b: _eq(Dist(b['x'], b['y']), Dist(b['y'], b['x'])),
                    statement='d(x,y) = d(y,x)'),
        AxiomSchema('A21', (('x', TERM), ('y', TERM), ('z', TERM)),
                    lambda sig, b: _le(Dist(b['x'], b['z']), Add(Dist(b['x'], b['y']), Dist(b['y'], b['z']))),
                    statement='d(x,z) <= d(x,y) + d(y,z)'),
        # bounds and Lipschitz conditions
        AxiomSchema('A22', (('F', FUNCTION), ('xs', TERMS), ('ys', TERMS)), _function_atoms,
                    statement='d(F(xs), F(ys)) <= lambda_F d(xs, ys)'),
        AxiomSchema('A23', (('R', RELATION), ('xs', TERMS), ('ys', TERMS)), _relation_atoms,
                    statement='R(xs) - R(ys) <= lambda_R d(xs, ys)'),
        AxiomSchema('A24', (('R', RELATION), ('xs', TERMS)), _relation_bounds, statement='0 <= R(xs) <= 1'),
    ]
}


def get_axiom(name: str) -> AxiomSchema:
    if name not in AXIOMS:
        raise UnknownAxiom(f"unknown axiom {name!r}, expected one of A1 ... A24.")
    return AXIOMS[name]


def _check_value(kind, key, value):
    ok = {
        FORMULA: lambda v: isinstance(v, Formula),
        RATIONAL: lambda v: isinstance(v, Rational) and not isinstance(v, bool),
        VARIABLE: lambda v: isinstance(v, str) and IDENTIFIER.match(v) and v not in KEYWORDS,
        TERM: lambda v: isinstance(v, Term),
        TERMS: lambda v: isinstance(v, (list, tuple)) and len(v) > 0 and all(isinstance(t, Term) for t in v),
        FUNCTION: lambda v: isinstance(v, str),
        RELATION: lambda v: isinstance(v, str),
    }[kind]
    if not ok(value):
        raise MalformedBindings(f"binding {key!r} must be a {kind}, got {value!r}.")


def check_bindings(schema: AxiomSchema, bindings: dict) -> dict:
    """Checks that ``bindings`` gives every metavariable of ``schema`` a value of its kind.

    Returns:
        dict: the bindings with rationals as :class:`Fraction` and term lists as tuples.

    Raises:
        MalformedBindings: on missing, extra or ill-typed bindings.
    """
    kinds = schema.kinds()
    missing = sorted(set(kinds) - set(bindings))
    extra = sorted(set(bindings) - set(kinds))
    if missing or extra:
        raise MalformedBindings(f"{schema.name} binds {sorted(kinds) or 'nothing'}; missing {missing}, extra {extra}.")
    out = {}
    for key, kind in kinds.items():
        value = bindings[key]
        _check_value(kind, key, value)
        if kind == RATIONAL:
            value = Fraction(value)
        elif kind == TERMS:
            value = tuple(value)
        out[key] = value
    return out


def instantiate(name: str, bindings: dict, sig: Signature) -> list:
    """The conditions of the instance of axiom ``name`` under ``bindings``, ignoring side conditions.

    Raises:
        UnknownAxiom: if there is no such axiom.
        MalformedBindings: if the bindings do not fit the schema.
        NotSubstitutable: for an A10 instance whose substitution captures a variable.
        UnknownSymbol: if a bound symbol is not in ``sig``.
    """
    schema = get_axiom(name)
    return schema.build(sig, check_bindings(schema, bindings))


def side_condition_failure(name: str, bindings: dict):
    """A description of the violated side condition of the instance, or ``None``."""
    schema = get_axiom(name)
    if schema.side_condition is None:
        return None
    return schema.side_condition(check_bindings(schema, bindings))


def match_axiom(cond: Condition, name: str, bindings: dict, sig: Signature = EMPTY_SIGNATURE) -> bool:
    """Whether ``cond`` is an instance of axiom ``name`` under ``bindings``.

    The comparison is modulo α-renaming and the collapse of every ``0·φ`` to ``0``. Side conditions
    are enforced: a capturing A10 substitution and a violated side condition of A1, A11, A13 or A18
    give ``False``.

    Args:
        cond (Condition): the candidate condition.
        name (str): ``'A1'`` ... ``'A24'``.
        bindings (dict): a value for every metavariable of the schema.
        sig (Signature, optional): needed by A22 - A24 for arities and Lipschitz constants.

    Raises:
        UnknownAxiom: if ``name`` is not an axiom.
        MalformedBindings: if the bindings do not fit the schema.
    """
    try:
        instances = instantiate(name, bindings, sig)
    except (NotSubstitutable, UnknownSymbol):
        return False
    if side_condition_failure(name, bindings) is not None:
        return False
    target = cond.normal_form()
    return any(c.normal_form() == target for c in instances)
