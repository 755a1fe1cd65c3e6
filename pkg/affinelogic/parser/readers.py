"""Readers and writers of the JSON and line-oriented documents.

Rationals are written as canonical strings (``"1/2"``); on input decimals and JSON numbers are read
exactly. Writers sort keys, so identical inputs give byte-identical documents.
"""
import json
from fractions import Fraction

import numpy as np

from ..common.errors import ALSyntaxError, DimensionMismatch, MalformedBindings, SchemaError, SourceSpan, \
    UnknownAxiomName
from ..common.file_utils import FORMULAS_EXT, PROOF_EXT, SIGNATURE_EXT, STRUCTURE_EXT, THEORY_EXT, WEIGHTS_EXT, \
    read_text
from ..common.rationals import format_rational, parse_rational
from ..proof.axioms import AXIOMS, FORMULA, RATIONAL, TERM, TERMS, VARIABLE
from ..proof.script import AxiomRef, Hyp, ProofScript, RuleRef, Step
from ..semantics.structure import FiniteChargedStructure
from ..syntax.formulas import Formula
from ..syntax.signature import EMPTY_SIGNATURE, FunctionSymbol, RelationSymbol, Signature
from ..syntax.terms import Term
from ..ultramean.charge_space import UltrachargeSpace
from .formula_parser import parse_condition, parse_formula, parse_term
from .printer import pretty, pretty_condition, pretty_term


def load_json(text: str, file: str = '<string>'):
    """``json.loads`` with exact rationals for non-integer numbers.

    Raises:
        ALSyntaxError: with the position of the first JSON error.
    """
    try:
        return json.loads(text, parse_float=lambda s: parse_rational(s, SourceSpan(file)))
    except json.JSONDecodeError as e:
        raise ALSyntaxError(e.msg, SourceSpan(file, e.lineno, e.colno))


def _fields(doc, required, optional, what: str, file: str) -> dict:
    if not isinstance(doc, dict):
        raise SchemaError(f"a {what} must be a JSON object.", SourceSpan(file))
    missing = [k for k in required if k not in doc]
    extra = sorted(set(doc) - set(required) - set(optional))
    if missing:
        raise SchemaError(f"{what} is missing {', '.join(missing)}.", SourceSpan(file))
    if extra:
        raise SchemaError(f"{what} has unexpected field(s) {', '.join(extra)}.", SourceSpan(file))
    return doc


def _rationals(value, file):
    if isinstance(value, list):
        return [_rationals(v, file) for v in value]
    return parse_rational(value, SourceSpan(file))


def _list(value, what, file) -> list:
    if not isinstance(value, list):
        raise SchemaError(f"{what} must be a list.", SourceSpan(file))
    return value


# signatures

def parse_signature(text: str, file: str = '<string>') -> Signature:
    """Reads ``{"constants": [...], "functions": [{"name", "arity", "lipschitz"}], "relations": [...]}``."""
    doc = _fields(load_json(text, file), (), ('constants', 'functions', 'relations'), 'signature', file)
    symbols = {}
    for key in ('functions', 'relations'):
        entries = []
        for entry in _list(doc.get(key, []), key, file):
            entry = _fields(entry, ('name', 'arity'), ('lipschitz', ), f"{key[:-1]} symbol", file)
            lipschitz = parse_rational(entry.get('lipschitz', 1), SourceSpan(file))
            entries.append((entry['name'], entry['arity'], lipschitz))
        symbols[key] = entries
    return Signature(constants=tuple(_list(doc.get('constants', []), 'constants', file)),
                     functions=tuple(FunctionSymbol(*e) for e in symbols['functions']),
                     relations=tuple(RelationSymbol(*e) for e in symbols['relations']))


def _symbols(entries) -> list:
    return [{'name': s.name, 'arity': s.arity, 'lipschitz': s.lipschitz} for s in entries]


def dump_signature(sig: Signature) -> str:
    return dump_json({'constants': list(sig.constants), 'functions': _symbols(sig.functions),
                      'relations': _symbols(sig.relations)})


# structures

def parse_structure(sig: Signature, text: str, file: str = '<string>') -> FiniteChargedStructure:
    """Reads a structure document. The result is not validated.

    The document has the fields ``points`` (labels), ``metric`` (matrix of rationals), ``charge``
    (one rational per point) and optionally ``constants`` (name to point index), ``functions``
    (name to a nested table of point indices) and ``relations`` (name to a nested table of rationals).

    Args:
        sig (Signature): tables of declared symbols must have the declared arity.
        text (str): the JSON document.
        file (str, optional): name used in error positions.

    Raises:
        ALSyntaxError: on malformed JSON or rationals.
        SchemaError: on missing or unexpected fields.
        DimensionMismatch: if an array does not fit the number of points.
    """
    doc = _fields(load_json(text, file), ('points', 'metric', 'charge'), ('constants', 'functions', 'relations'),
                  'structure', file)
    functions = doc.get('functions', {})
    relations = doc.get('relations', {})
    constants = doc.get('constants', {})
    for what, table in (('constants', constants), ('functions', functions), ('relations', relations)):
        if not isinstance(table, dict):
            raise SchemaError(f"{what} must map symbol names to values.", SourceSpan(file))
    for name, table in functions.items():
        if sig.is_function(name) and np.ndim(table) != sig.function(name).arity:
            raise DimensionMismatch(f"table of {name!r} must have {sig.function(name).arity} axes.", SourceSpan(file))
    for name, table in relations.items():
        if sig.is_relation(name) and np.ndim(table) != sig.relation(name).arity:
            raise DimensionMismatch(f"table of {name!r} must have {sig.relation(name).arity} axes.", SourceSpan(file))
    return FiniteChargedStructure(
        points=_list(doc['points'], 'points', file),
        metric=_rationals(_list(doc['metric'], 'metric', file), file),
        charge=_rationals(_list(doc['charge'], 'charge', file), file),
        constants=constants,
        functions=functions,
        relations={name: _rationals(table, file) for name, table in relations.items()})


def dump_structure(S: FiniteChargedStructure) -> str:
    value = format_rational if S.exact else float
    return dump_json({
        'points': list(S.points),
        'metric': [[value(v) for v in row] for row in S.metric],
        'charge': [value(v) for v in S.charge],
        'constants': dict(S.constants),
        'functions': {k: t.tolist() for k, t in S.functions.items()},
        'relations': {k: np.vectorize(value, otypes=[object])(t).tolist() for k, t in S.relations.items()},
    })


# weights

def parse_weights(text: str, file: str = '<string>') -> UltrachargeSpace:
    """Reads a JSON list of rationals, e.g. ``["1/2", "1/2"]``."""
    weights = _list(load_json(text, file), 'weights', file)
    return UltrachargeSpace(tuple(parse_rational(w, SourceSpan(file)) for w in weights))


def dump_weights(ws) -> str:
    weights = ws.weights if isinstance(ws, UltrachargeSpace) else ws
    return dump_json([Fraction(w) for w in weights])


# theories and formula lists

def _lines(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0]
        if line.strip():
            yield lineno, line


def parse_theory(sig: Signature, text: str, file: str = '<string>') -> list:
    """One condition per line; ``#`` starts a comment. ``phi = psi`` contributes two conditions."""
    theory = []
    for lineno, line in _lines(text):
        theory.extend(parse_condition(sig, line, file, lineno))
    return theory


def parse_formula_list(sig: Signature, text: str, file: str = '<string>') -> list:
    """One formula per line; ``#`` starts a comment."""
    return [parse_formula(sig, line, file, lineno) for lineno, line in _lines(text)]


def dump_theory(theory) -> str:
    return ''.join(pretty_condition(c) + '\n' for c in theory)


# proofs

def _binding(sig, kind, key, value, file):
    span = SourceSpan(file)
    if kind == FORMULA and isinstance(value, str):
        return parse_formula(sig, value, file)
    if kind == TERM and isinstance(value, str):
        return parse_term(sig, value, file)
    if kind == TERMS and isinstance(value, list) and all(isinstance(v, str) for v in value):
        return [parse_term(sig, v, file) for v in value]
    if kind == RATIONAL and isinstance(value, (str, int, Fraction)):
        return parse_rational(value, span)
    if kind not in (FORMULA, TERM, TERMS, RATIONAL) and isinstance(value, str):
        return value
    raise MalformedBindings(f"binding {key!r} must be a {kind}, got {value!r}.", span)


def _justification(sig, raw, step_id, file):
    span = SourceSpan(file)
    if raw == 'hyp':
        return Hyp()
    if isinstance(raw, dict) and 'axiom' in raw:
        raw = _fields(raw, ('axiom', ), ('bindings', ), f"justification of step {step_id!r}", file)
        name = raw['axiom']
        if name not in AXIOMS:
            raise UnknownAxiomName(f"step {step_id!r} cites unknown axiom {name!r}.", span)
        kinds = AXIOMS[name].kinds()
        bindings = raw.get('bindings', {})
        if not isinstance(bindings, dict):
            raise SchemaError(f"bindings of step {step_id!r} must be an object.", span)
        # unknown keys are kept so the kernel reports them
        return AxiomRef(name, {k: _binding(sig, kinds[k], k, v, file) if k in kinds else v
                               for k, v in bindings.items()})
    if isinstance(raw, dict) and 'rule' in raw:
        raw = _fields(raw, ('rule', 'premises'), (), f"justification of step {step_id!r}", file)
        return RuleRef(raw['rule'], tuple(_list(raw['premises'], 'premises', file)))
    raise SchemaError(f"step {step_id!r}: justification must be \"hyp\", {{\"axiom\": ...}} or {{\"rule\": ...}}.",
                      span)


def _single_condition(sig, text, file, what):
    if not isinstance(text, str):
        raise SchemaError(f"{what} must be a condition string.", SourceSpan(file))
    conditions = parse_condition(sig, text, file)
    if len(conditions) != 1:
        raise SchemaError(f"{what} must be a single '<=' condition.", SourceSpan(file))
    return conditions[0]


def parse_proof(sig: Signature, text: str, file: str = '<string>') -> ProofScript:
    """Reads a proof script.

    The document has ``hypotheses`` (condition strings; ``=`` gives two hypotheses), ``steps`` and an
    optional ``description``. Each step is ``{"id", "condition", "justification"}`` where the
    condition is a single ``<=`` condition and the justification is ``"hyp"``,
    ``{"axiom": "A10", "bindings": {...}}`` or ``{"rule": "R1", "premises": [1, 2]}``.

    Raises:
        ALSyntaxError: on malformed JSON or formulas.
        SchemaError: on missing or unexpected fields.
        UnknownAxiomName: if a step cites an axiom that does not exist.
        DanglingPremiseId: if a rule refers to an unknown or later step.
    """
    doc = _fields(load_json(text, file), ('hypotheses', 'steps'), ('description', ), 'proof', file)
    hypotheses = []
    for h in _list(doc['hypotheses'], 'hypotheses', file):
        if not isinstance(h, str):
            raise SchemaError("hypotheses must be condition strings.", SourceSpan(file))
        hypotheses.extend(parse_condition(sig, h, file))
    steps = []
    for raw in _list(doc['steps'], 'steps', file):
        raw = _fields(raw, ('id', 'condition', 'justification'), (), 'step', file)
        condition = _single_condition(sig, raw['condition'], file, f"condition of step {raw['id']!r}")
        steps.append(Step(raw['id'], condition, _justification(sig, raw['justification'], raw['id'], file)))
    return ProofScript(tuple(hypotheses), tuple(steps), sig, doc.get('description', ''))


def _dump_binding(value):
    if isinstance(value, Formula):
        return pretty(value)
    if isinstance(value, Term):
        return pretty_term(value)
    if isinstance(value, (list, tuple)):
        return [_dump_binding(v) for v in value]
    return value


def dump_proof(script: ProofScript) -> str:
    steps = []
    for step in script.steps:
        just = step.justification
        if isinstance(just, Hyp):
            raw = 'hyp'
        elif isinstance(just, AxiomRef):
            raw = {'axiom': just.name, 'bindings': {k: _dump_binding(v) for k, v in just.bindings.items()}}
        else:
            raw = {'rule': just.name, 'premises': list(just.premises)}
        steps.append({'id': step.id, 'condition': pretty_condition(step.condition), 'justification': raw})
    doc = {'hypotheses': [pretty_condition(c) for c in script.hypotheses], 'steps': steps}
    if script.description:
        doc['description'] = script.description
    return dump_json(doc)


# generic JSON

def _encode(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def dump_json(obj) -> str:
    """JSON text with sorted keys and rationals as canonical strings."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False, default=_encode) + '\n'


# files

def load_signature(path: str) -> Signature:
    return parse_signature(read_text(path, SIGNATURE_EXT), path)


def load_structure(path: str, sig: Signature = EMPTY_SIGNATURE) -> FiniteChargedStructure:
    return parse_structure(sig, read_text(path, STRUCTURE_EXT), path)


def load_weights(path: str) -> UltrachargeSpace:
    return parse_weights(read_text(path, WEIGHTS_EXT), path)


def load_theory(path: str, sig: Signature = EMPTY_SIGNATURE) -> list:
    return parse_theory(sig, read_text(path, THEORY_EXT), path)


def load_formulas(path: str, sig: Signature = EMPTY_SIGNATURE) -> list:
    return parse_formula_list(sig, read_text(path, FORMULAS_EXT), path)


def load_proof(path: str, sig: Signature = EMPTY_SIGNATURE) -> ProofScript:
    return parse_proof(sig, read_text(path, PROOF_EXT), path)
