import itertools
from dataclasses import dataclass

from ..syntax.signature import Signature
from .structure import FiniteChargedStructure


@dataclass(frozen=True)
class Violation:
    """One failed constraint of a structure.

    Attributes:
        kind (str): e.g. ``'SymmetryViolation'``.
        axiom (str): the axiom of the proof system the constraint comes from, ``''`` if none.
        witnesses (tuple): the points (or tuples of points) exhibiting the failure.
        detail (str): human readable explanation.
    """
    kind: str
    axiom: str
    witnesses: tuple
    detail: str = ''


def _check_signature(sig, S, out):
    for name in sig.constants:
        if name not in S.constants:
            out.append(Violation('MissingInterpretation', '', (name, ), f"constant {name} is not interpreted"))
    for symbol in sig.functions:
        table = S.functions.get(symbol.name)
        if table is None or table.ndim != symbol.arity:
            out.append(Violation('MissingInterpretation', '', (symbol.name, ),
                                 f"function {symbol.name} needs a table of arity {symbol.arity}"))
    for symbol in sig.relations:
        table = S.relations.get(symbol.name)
        if table is None or table.ndim != symbol.arity:
            out.append(Violation('MissingInterpretation', '', (symbol.name, ),
                                 f"relation {symbol.name} needs a table of arity {symbol.arity}"))
    known = set(sig.constants) | {s.name for s in sig.functions} | {s.name for s in sig.relations}
    for name in list(S.constants) + list(S.functions) + list(S.relations):
        if name not in known:
            out.append(Violation('UndeclaredSymbol', '', (name, ), f"{name} is not in the signature"))


def _check_metric(S, allow_pseudometric, out):
    rho, n = S.metric, S.size
    for a in range(n):
        if rho[a, a] != 0:
            out.append(Violation('ReflexivityViolation', 'A19', (a, ), f"d({a},{a}) = {rho[a, a]}"))
    for a, b in itertools.combinations(range(n), 2):
        if rho[a, b] != rho[b, a]:
            out.append(Violation('SymmetryViolation', 'A20', (a, b), f"d({a},{b}) = {rho[a, b]} != {rho[b, a]}"))
        if rho[a, b] == 0 and not allow_pseudometric:
            out.append(Violation('IdentityViolation', '', (a, b), f"distinct points {a} and {b} at distance 0"))
    for a, b in itertools.product(range(n), repeat=2):
        if not 0 <= rho[a, b] <= 1:
            out.append(Violation('MetricBoundViolation', 'A24', (a, b), f"d({a},{b}) = {rho[a, b]} not in [0, 1]"))
    for a, b, c in itertools.product(range(n), repeat=3):
        if rho[a, c] > rho[a, b] + rho[b, c]:
            out.append(Violation('TriangleViolation', 'A21', (a, b, c),
                                 f"d({a},{c}) = {rho[a, c]} > d({a},{b}) + d({b},{c}) = {rho[a, b] + rho[b, c]}"))


def _neighbours(n, arity):
    # tuple pairs differing in one coordinate; for the sum metric they suffice (chain through the
    # intermediate tuples with the triangle inequality)
    for args in itertools.product(range(n), repeat=arity):
        for i in range(arity):
            for b in range(args[i] + 1, n):
                yield args, args[:i] + (b, ) + args[i + 1:], i


def _check_lipschitz(sig, S, out):
    rho, n = S.metric, S.size
    for symbol in sig.functions:
        table = S.functions.get(symbol.name)
        if table is None or table.ndim != symbol.arity:
            continue
        for args, other, i in _neighbours(n, symbol.arity):
            lhs = rho[table[args], table[other]]
            allowed = symbol.lipschitz * rho[args[i], other[i]]
            if lhs > allowed:
                out.append(Violation('FunctionLipschitzViolation', 'A22', (symbol.name, args, other),
                                     f"d({symbol.name}{args}, {symbol.name}{other}) = {lhs} > {allowed}"))
    for symbol in sig.relations:
        table = S.relations.get(symbol.name)
        if table is None or table.ndim != symbol.arity:
            continue
        for args in itertools.product(range(n), repeat=symbol.arity):
            if not 0 <= table[args] <= 1:
                out.append(Violation('RelationBoundViolation', 'A24', (symbol.name, args),
                                     f"{symbol.name}{args} = {table[args]} not in [0, 1]"))
        for args, other, i in _neighbours(n, symbol.arity):
            gap = abs(table[args] - table[other])
            allowed = symbol.lipschitz * rho[args[i], other[i]]
            if gap > allowed:
                out.append(Violation('RelationLipschitzViolation', 'A23', (symbol.name, args, other),
                                     f"|{symbol.name}{args} - {symbol.name}{other}| = {gap} > {allowed}"))


def _check_charge(S, mass_le_one, out):
    for a in range(S.size):
        if S.charge[a] < 0:
            out.append(Violation('NegativeCharge', '', (a, ), f"charge of {a} is {S.charge[a]}"))
    mass = S.mass
    if mass_le_one:
        if not 0 <= mass <= 1:
            out.append(Violation('MassViolation', '', (), f"total charge {mass} not in [0, 1]"))
    elif mass != 1:
        out.append(Violation('MassViolation', 'A15', (), f"total charge {mass} != 1"))


def validate_structure(sig: Signature, S: FiniteChargedStructure, mass_le_one: bool = False,
                       allow_pseudometric: bool = False) -> list:
    """Checks every constraint a finite charged structure must satisfy.

    The checks are exhaustive: reflexivity, symmetry, triangle inequality and ``0 <= d <= 1`` for the
    metric; the Lipschitz condition of every function and relation symbol with respect to the sum
    metric on tuples; ``0 <= R <= 1``; a non-negative charge of total mass 1 (or at most 1 with
    ``mass_le_one``). Regularity of the charge holds trivially on a finite discrete space and is not
    checked.

    Args:
        sig (Signature): the signature.
        S (FiniteChargedStructure): the structure.
        mass_le_one (bool, optional): accept a total charge in ``[0, 1]``. Defaults to ``False``.
        allow_pseudometric (bool, optional): accept distinct points at distance 0, as in a
            prestructure. Defaults to ``False``.

    Returns:
        list: :class:`Violation` entries, empty if ``S`` is valid.
    """
    out = []
    _check_signature(sig, S, out)
    _check_metric(S, allow_pseudometric, out)
    _check_lipschitz(sig, S, out)
    _check_charge(S, mass_le_one, out)
    return out
