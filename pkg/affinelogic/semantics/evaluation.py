import itertools
import warnings
from dataclasses import dataclass
from typing import Mapping

from ..common.errors import UnboundVariable
from ..syntax.formulas import Add, Condition, Dist, Formula, Int, Inf, One, Rel, Scale, Sup
from ..syntax.lipschitz import formula_lipschitz_bound
from ..syntax.signature import Signature
from ..syntax.terms import App, Const, Term, Var
from .structure import FiniteChargedStructure
from .tables import ValueTables

# variable name -> point index
Environment = Mapping[str, int]


@dataclass(frozen=True)
class TraceEntry:
    formula: Formula
    env: tuple
    value: object


@dataclass(frozen=True)
class ValueReport:
    """Value of a formula with optional evaluation trace.

    Attributes:
        value: exact :class:`fractions.Fraction`, or ``float`` on the fast path.
        trace (tuple): :class:`TraceEntry` per evaluated subformula, ``None`` unless requested.
        exact (bool): ``False`` on the float fast path.
        tolerance: the caller's tolerance for float values, ``None`` when exact.
        bound: ``b_φ`` when a signature was given, else ``None``.
    """
    value: object
    trace: tuple = None
    exact: bool = True
    tolerance: object = None
    bound: object = None


def eval_term(S: FiniteChargedStructure, t: Term, env: Environment) -> int:
    """Point index denoted by ``t`` under ``env``.

    Raises:
        UnboundVariable: if ``env`` misses a variable of ``t``.
    """
    if isinstance(t, Var):
        if t.name not in env:
            raise UnboundVariable(f"variable {t.name!r} is not bound by the environment.")
        return int(env[t.name])
    if isinstance(t, Const):
        return S.constants[t.name]
    return int(S.functions[t.function][tuple(eval_term(S, a, env) for a in t.args)])


class _PointwiseEvaluator:

    def __init__(self, S, trace):
        self.S = S
        self.trace = [] if trace else None

    def value(self, phi, env):
        S = self.S
        if isinstance(phi, One):
            v = S.one
        elif isinstance(phi, Dist):
            v = S.metric[eval_term(S, phi.left, env), eval_term(S, phi.right, env)]
        elif isinstance(phi, Rel):
            v = S.relations[phi.relation][tuple(eval_term(S, a, env) for a in phi.args)]
        elif isinstance(phi, Add):
            v = self.value(phi.left, env) + self.value(phi.right, env)
        elif isinstance(phi, Scale):
            v = S.scalar(phi.r) * self.value(phi.body, env)
        else:
            values = [self.value(phi.body, {**env, phi.var: b}) for b in range(S.size)]
            if isinstance(phi, Inf):
                v = min(values)
            elif isinstance(phi, Sup):
                v = max(values)
            else:
                assert isinstance(phi, Int), f"not a formula: {phi!r}"
                v = sum((S.charge[b] * values[b] for b in range(S.size)), S.scalar(0))
        if self.trace is not None:
            self.trace.append(TraceEntry(phi, tuple(sorted(env.items())), v))
        return v


def eval_formula(S: FiniteChargedStructure, phi: Formula, env: Environment or None = None):
    """Value of ``phi`` in ``S`` under ``env``, following the clauses of the value definition:
    ``inf``/``sup`` are the minimum/maximum over all points and ``∫ φ dy`` is ``Σ_b μ(b)·φ(b)``.

    Raises:
        UnboundVariable: if ``env`` misses a free variable of ``phi``.
    """
    return _PointwiseEvaluator(S, False).value(phi, dict(env or {}))


def evaluate(S: FiniteChargedStructure, phi: Formula, env: Environment or None = None, trace: bool = False,
             sig: Signature or None = None, tolerance=None) -> ValueReport:
    """:func:`eval_formula` wrapped in a :class:`ValueReport`.

    Args:
        S (FiniteChargedStructure): the structure.
        phi (Formula): the formula.
        env (dict, optional): the environment.
        trace (bool, optional): record every subformula evaluation. Defaults to ``False``.
        sig (Signature, optional): when given, ``b_φ`` is reported and ``|value| <= b_φ`` asserted.
        tolerance (optional): carried into the report for float structures.
    """
    if S.exact and tolerance is not None:
        warnings.warn("a tolerance has no effect on an exact structure.", stacklevel=2)
    evaluator = _PointwiseEvaluator(S, trace)
    value = evaluator.value(phi, dict(env or {}))
    bound = None
    if sig is not None:
        bound = formula_lipschitz_bound(sig, phi)[1]
        if S.exact:
            assert abs(value) <= bound, f"|{value}| exceeds the bound {bound}"
    return ValueReport(value=value, trace=tuple(evaluator.trace) if trace else None, exact=S.exact,
                       tolerance=None if S.exact else tolerance, bound=bound)


def environments(S: FiniteChargedStructure, variables):
    """Every environment over ``variables``, in lexicographic order."""
    variables = tuple(variables)
    for values in itertools.product(range(S.size), repeat=len(variables)):
        yield dict(zip(variables, values))


def check_condition(S: FiniteChargedStructure, cond: Condition, tables: ValueTables or None = None) -> tuple:
    """Decides ``cond`` in ``S``.

    An open condition holds when it holds under every environment of its free variables.

    Args:
        S (FiniteChargedStructure): the structure.
        cond (Condition): the condition ``φ <= ψ``.
        tables (ValueTables, optional): a cache to reuse across calls on the same structure.

    Returns:
        tuple: ``(holds, margin)`` with ``margin`` the minimum of ``ψ - φ`` over all environments.
    """
    tables = tables or ValueTables(S)
    variables = tuple(sorted(cond.free_vars()))
    gap = tables.table(cond.rhs, variables) - tables.table(cond.lhs, variables)
    margin = gap.min()
    return bool(margin >= 0), margin
