import itertools
from fractions import Fraction

from .formulas import ONE, Add, Dist, Formula, Int, Inf, Rel, Scale, Sup, depth, free_vars
from .signature import Signature
from .terms import App, Const, Var

DEFAULT_SCALARS = (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1))
DEFAULT_BOUND_VARIABLES = ('y', 'z', 'w', 'u')


def enumerate_terms(sig: Signature, variables, term_depth: int = 0) -> list:
    """Variables and constants, closed ``term_depth`` times under the function symbols."""
    terms = [Var(v) for v in variables] + [Const(c) for c in sig.constants]
    for _ in range(term_depth):
        applied = [App(f.name, args) for f in sig.functions for args in itertools.product(terms, repeat=f.arity)]
        terms = terms + [t for t in applied if t not in terms]
    return terms


class FormulaEnumerator:
    """Exhaustive enumeration of formulas up to an AST depth.

    With ``prune=True`` only one representative of some trivially equivalent formulas is produced:
    sums are generated for unordered pairs, ``1·φ`` is skipped, ``0·φ`` is produced for ``φ = 1``
    only, and a quantifier is only put in front of a body in which its variable occurs free. Each
    bound variable is the first name of ``bound_variables`` not already in scope, so α-variants are
    not repeated.

    Args:
        sig (Signature): the signature.
        scalars (tuple): the scalars ``r`` used in ``r·φ``. Defaults to ``(-1, 0, 1/2, 1)``.
        bound_variables (tuple): names available for quantified variables.
        prune (bool): skip trivially equivalent formulas. Defaults to ``True``.
        term_depth (int): nesting of function symbols inside atoms. Defaults to ``0``.
    """

    def __init__(self, sig: Signature, scalars=DEFAULT_SCALARS, bound_variables=DEFAULT_BOUND_VARIABLES,
                 prune: bool = True, term_depth: int = 0):
        self.sig = sig
        self.scalars = tuple(Fraction(r) for r in scalars)
        self.bound_variables = tuple(bound_variables)
        self.prune = prune
        self.term_depth = term_depth
        self._exact = {}

    def atoms(self, scope: tuple) -> list:
        terms = enumerate_terms(self.sig, scope, self.term_depth)
        out = [ONE]
        out += [Dist(s, t) for s in terms for t in terms]
        for symbol in self.sig.relations:
            out += [Rel(symbol.name, args) for args in itertools.product(terms, repeat=symbol.arity)]
        return out

    def exact(self, k: int, scope: tuple) -> list:
        """Formulas of depth exactly ``k`` with free variables in ``scope``."""
        key = (k, scope)
        if key in self._exact:
            return self._exact[key]
        if k < 1:
            result = []
        elif k == 1:
            result = self.atoms(scope)
        else:
            result = []
            below = self.up_to(k - 1, scope)
            for i, a in enumerate(below):
                for b in (below[i:] if self.prune else below):
                    if depth(a) == k - 1 or depth(b) == k - 1:
                        result.append(Add(a, b))
            for a in self.exact(k - 1, scope):
                for r in self.scalars:
                    if self.prune and (r == 1 or (r == 0 and a != ONE)):
                        continue
                    result.append(Scale(r, a))
            bound = next((v for v in self.bound_variables if v not in scope), None)
            if bound is not None:
                for body in self.exact(k - 1, scope + (bound, )):
                    if self.prune and bound not in free_vars(body):
                        continue
                    result += [Inf(bound, body), Sup(bound, body), Int(bound, body)]
        self._exact[key] = result
        return result

    def up_to(self, k: int, scope: tuple) -> list:
        return [phi for j in range(1, k + 1) for phi in self.exact(j, scope)]


def enumerate_formulas(sig: Signature, variables, max_depth: int, scalars=DEFAULT_SCALARS,
                       prune: bool = True, term_depth: int = 0) -> list:
    """All formulas of AST depth at most ``max_depth`` whose free variables are among ``variables``.

    See :class:`FormulaEnumerator` for the meaning of ``prune``.
    """
    enumerator = FormulaEnumerator(sig, scalars=scalars, prune=prune, term_depth=term_depth)
    return enumerator.up_to(max_depth, tuple(variables))
