import logging
from fractions import Fraction

import numpy as np

from ..common.errors import NotSubstitutable
from ..syntax.enumeration import DEFAULT_SCALARS
from ..syntax.formulas import ZERO, Add, Condition, Int, Scale, Sup, free_vars, numeral
from ..syntax.generator import DEFAULT_VARIABLES, pick, random_formula, random_term
from ..syntax.signature import EMPTY_SIGNATURE, METRIC_SYMBOL, Signature
from .axioms import AXIOMS, FORMULA, FUNCTION, RATIONAL, RELATION, TERM, TERMS, VARIABLE, instantiate
from .script import AxiomRef, Hyp, ProofScript, RuleRef, Step

logger = logging.getLogger(__name__)

MOVES = ('axiom', 'axiom', 'chain', 'chain', 'R2', 'R3', 'R4', 'R5', 'hyp')


class ScriptGenerator:
    """Random proof scripts that the kernel accepts by construction.

    Every step is an axiom instance with random bindings meeting the side conditions, a hypothesis,
    or a rule applied to earlier steps so that its side conditions hold. ``chain`` moves rewrite the
    right side of an earlier step with an axiom and close the gap with R1.

    Args:
        rng (np.random.RandomState): the source of randomness.
        sig (Signature, optional): the signature. Defaults to the empty signature.
        variables (tuple, optional): free variables of the generated conditions.
        max_depth (int, optional): AST depth of the random formulas in bindings. Defaults to ``2``.
        scalars (tuple, optional): scalars of the bindings. Defaults to ``(-1, 0, 1/2, 1)``.
    """

    def __init__(self, rng: np.random.RandomState, sig: Signature = EMPTY_SIGNATURE, variables=DEFAULT_VARIABLES,
                 max_depth: int = 2, scalars=DEFAULT_SCALARS):
        self.rng = rng
        self.sig = sig
        self.variables = tuple(variables)
        self.max_depth = max_depth
        self.scalars = tuple(Fraction(r) for r in scalars)

    def formula(self, variables=None):
        variables = self.variables if variables is None else tuple(variables)
        return random_formula(self.rng, self.sig, variables, self.max_depth, self.scalars)

    def term(self):
        return random_term(self.rng, self.sig, self.variables)

    def binding(self, kind, name, schema, values):
        if kind == FORMULA:
            # side conditions of A11 and A18: the quantified variable is not free
            if (schema.name, name) in (('A11', 'psi'), ('A18', 'phi')):
                return self.formula([v for v in self.variables if v != values['x']])
            return self.formula()
        if kind == RATIONAL:
            return pick(self.rng, self.scalars)
        if kind == VARIABLE:
            return pick(self.rng, self.variables)
        if kind == TERM:
            return self.term()
        if kind == FUNCTION:
            return pick(self.rng, self.sig.functions).name
        if kind == RELATION:
            names = [s.name for s in self.sig.relations]
            return pick(self.rng, names + [METRIC_SYMBOL] * (1 if schema.name == 'A24' else 0))
        assert kind == TERMS, f"unknown metavariable kind {kind!r}"
        symbol = values.get('F') or values.get('R')
        if symbol == METRIC_SYMBOL:
            arity = 2
        elif self.sig.is_function(symbol):
            arity = self.sig.function(symbol).arity
        else:
            arity = self.sig.relation(symbol).arity
        return [self.term() for _ in range(arity)]

    def axiom_names(self) -> list:
        names = [n for n in AXIOMS if n not in ('A22', 'A23')]
        if self.sig.functions:
            names.append('A22')
        if self.sig.relations:
            names.append('A23')
        return names

    def random_axiom(self) -> tuple:
        """A random ``(condition, AxiomRef)`` meeting the side conditions."""
        while True:
            schema = AXIOMS[pick(self.rng, self.axiom_names())]
            values = {}
            # variables first so formula bindings can avoid them
            for name, kind in sorted(schema.metavariables, key=lambda m: m[1] != VARIABLE):
                values[name] = self.binding(kind, name, schema, values)
            if schema.name == 'A1' and values['r'] > values['s']:
                values['r'], values['s'] = values['s'], values['r']
            if schema.name == 'A13':
                values['r'] = abs(values['r'])
            try:
                conditions = instantiate(schema.name, values, self.sig)
            except NotSubstitutable:
                continue
            return pick(self.rng, conditions), AxiomRef(schema.name, values)

    def chain_axiom(self, phi) -> tuple:
        """An axiom step ``phi <= phi'`` with ``phi'`` a rewriting of ``phi``."""
        options = [('A4', {'phi': phi}, 1), ('A8', {'phi': phi}, 1)]
        if isinstance(phi, Add):
            options.append(('A3', {'phi': phi.left, 'psi': phi.right}, 0))
        name, bindings, side = options[self.rng.randint(len(options))]
        return instantiate(name, bindings, self.sig)[side], AxiomRef(name, bindings)

    def hypotheses(self, count: int) -> list:
        out = []
        for _ in range(count):
            phi = self.formula()
            if self.rng.rand() < 0.5:
                # holds in every model
                out.append(Condition(phi, Add(phi, numeral(abs(pick(self.rng, self.scalars))))))
            else:
                out.append(Condition(phi, self.formula()))
        return out

    def generate(self, length: int = 8, n_hypotheses: int = 1) -> ProofScript:
        """A script of about ``length`` steps under ``n_hypotheses`` random hypotheses."""
        hypotheses = self.hypotheses(n_hypotheses)
        steps, depends = [], []

        def add(cond, just, deps):
            steps.append(Step(len(steps) + 1, cond, just))
            depends.append(deps)
            return len(steps)

        while len(steps) < length:
            move = pick(self.rng, MOVES) if steps else 'axiom'
            k = self.rng.randint(len(steps)) if steps else None
            if move == 'axiom' or (move == 'hyp' and not hypotheses):
                add(*self.random_axiom(), frozenset())
            elif move == 'hyp':
                i = self.rng.randint(len(hypotheses))
                add(hypotheses[i], Hyp(), frozenset([i]))
            elif move == 'chain':
                premise = steps[k].condition
                cond, just = self.chain_axiom(premise.rhs)
                j = add(cond, just, frozenset())
                add(Condition(premise.lhs, cond.rhs), RuleRef('R1', (k + 1, j)), depends[k])
            elif move == 'R2':
                premise, theta = steps[k].condition, self.formula()
                add(Condition(Add(premise.lhs, theta), Add(premise.rhs, theta)), RuleRef('R2', (k + 1, )), depends[k])
            elif move == 'R3':
                premise, r = steps[k].condition, abs(pick(self.rng, self.scalars))
                conclusion = Condition(Scale(r, premise.lhs), Scale(r, premise.rhs))
                if self.rng.rand() < 0.5:
                    add(conclusion, RuleRef('R3', (k + 1, )), depends[k])
                else:
                    j = add(Condition(ZERO, numeral(r)), AxiomRef('A1', {'r': Fraction(0), 's': r}), frozenset())
                    add(conclusion, RuleRef('R3', (j, k + 1)), depends[k])
            else:
                premise = steps[k].condition
                used = set().union(*(free_vars(hypotheses[i].lhs) | free_vars(hypotheses[i].rhs) for i in depends[k]))
                candidates = [v for v in self.variables if v not in used]
                if not candidates:
                    continue
                x = pick(self.rng, candidates)
                quantifier = Sup if move == 'R4' else Int
                add(Condition(quantifier(x, premise.lhs), quantifier(x, premise.rhs)), RuleRef(move, (k + 1, )),
                    depends[k])
        logger.debug("generated a script of %d steps", len(steps))
        return ProofScript(hypotheses, steps, self.sig)


def random_script(rng: np.random.RandomState, sig: Signature = EMPTY_SIGNATURE, length: int = 8,
                  n_hypotheses: int = 1, max_depth: int = 2) -> ProofScript:
    return ScriptGenerator(rng, sig, max_depth=max_depth).generate(length, n_hypotheses)
