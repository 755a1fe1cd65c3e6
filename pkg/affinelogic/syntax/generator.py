from fractions import Fraction

import numpy as np

from .enumeration import DEFAULT_SCALARS
from .formulas import ONE, Add, Dist, Formula, Int, Inf, Rel, Scale, Sup
from .signature import Signature
from .terms import App, Const, Term, Var

DEFAULT_VARIABLES = ('x', 'y', 'z')


def pick(rng: np.random.RandomState, items):
    """A uniformly chosen element of the sequence ``items``."""
    items = list(items)
    assert items, "cannot pick from an empty sequence."
    return items[rng.randint(len(items))]


def random_term(rng: np.random.RandomState, sig: Signature, variables, max_depth: int = 1) -> Term or None:
    """A random term over ``variables`` and the constants of ``sig``; ``None`` if there is none."""
    leaves = [Var(v) for v in variables] + [Const(c) for c in sig.constants]
    if max_depth > 0 and sig.functions and rng.rand() < 0.3:
        symbol = pick(rng, sig.functions)
        args = [random_term(rng, sig, variables, max_depth - 1) for _ in range(symbol.arity)]
        if all(a is not None for a in args):
            return App(symbol.name, tuple(args))
    return pick(rng, leaves) if leaves else None


def random_atom(rng: np.random.RandomState, sig: Signature, variables) -> Formula:
    kinds = ['one', 'dist', 'dist'] + (['rel', 'rel'] if sig.relations else [])
    kind = pick(rng, kinds)
    if kind == 'dist':
        left, right = random_term(rng, sig, variables), random_term(rng, sig, variables)
        if left is not None:
            return Dist(left, right)
    elif kind == 'rel':
        symbol = pick(rng, sig.relations)
        args = [random_term(rng, sig, variables) for _ in range(symbol.arity)]
        if all(a is not None for a in args):
            return Rel(symbol.name, tuple(args))
    return ONE


def random_formula(rng: np.random.RandomState, sig: Signature, variables=DEFAULT_VARIABLES[:1],
                   max_depth: int = 3, scalars=DEFAULT_SCALARS, bound_variables=DEFAULT_VARIABLES) -> Formula:
    """A random formula of AST depth at most ``max_depth`` with free variables among ``variables``.

    Quantifiers bind a name drawn from ``bound_variables``; rebinding a variable already in scope
    happens on purpose so that shadowing is exercised.

    Args:
        rng (np.random.RandomState): the source of randomness.
        sig (Signature): the signature.
        variables (tuple): variables that may occur free.
        max_depth (int): maximal AST depth. Defaults to ``3``.
        scalars (tuple): scalars for ``r·φ``. Defaults to ``(-1, 0, 1/2, 1)``.
        bound_variables (tuple): names for quantified variables.

    Returns:
        Formula: the formula.
    """
    variables = tuple(variables)
    if max_depth <= 1 or rng.rand() < 0.25:
        return random_atom(rng, sig, variables)
    kind = pick(rng, ('add', 'scale', 'inf', 'sup', 'int'))
    if kind == 'add':
        return Add(random_formula(rng, sig, variables, max_depth - 1, scalars, bound_variables),
                   random_formula(rng, sig, variables, max_depth - 1, scalars, bound_variables))
    if kind == 'scale':
        return Scale(Fraction(pick(rng, scalars)),
                     random_formula(rng, sig, variables, max_depth - 1, scalars, bound_variables))
    var = pick(rng, bound_variables)
    scope = variables if var in variables else variables + (var, )
    body = random_formula(rng, sig, scope, max_depth - 1, scalars, bound_variables)
    return {'inf': Inf, 'sup': Sup, 'int': Int}[kind](var, body)


def random_sentence(rng: np.random.RandomState, sig: Signature, max_depth: int = 3,
                    scalars=DEFAULT_SCALARS) -> Formula:
    return random_formula(rng, sig, (), max_depth, scalars)
