import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..common.errors import FamilyMiss, UnboundVariable
from ..parser.printer import pretty
from ..semantics.structure import FiniteChargedStructure
from ..semantics.tables import ValueTables
from ..syntax.enumeration import DEFAULT_SCALARS, FormulaEnumerator
from ..syntax.formulas import ONE, Add, Formula, Int, Scale, free_vars, normal_form
from ..syntax.signature import EMPTY_SIGNATURE, Signature


def default_variables(n: int) -> tuple:
    """``('x',)`` for one variable, ``('x1', ..., 'xn')`` otherwise."""
    return ('x', ) if n == 1 else tuple(f'x{i}' for i in range(1, n + 1))


@dataclass(frozen=True)
class RealizedType:
    """The type of a tuple, materialised on a finite family of formulas.

    ``p(phi)`` is the value of ``phi`` at ``point``, the ``i``-th variable naming the ``i``-th
    coordinate. Formulas are looked up modulo α-renaming.

    Attributes:
        structure (FiniteChargedStructure): the structure.
        point (tuple): the tuple realising the type.
        variables (tuple): the names of its coordinates.
        family (tuple): the formulas the type is known on.
        values (tuple): ``p`` on ``family``.
    """
    structure: FiniteChargedStructure
    point: tuple
    variables: tuple
    family: tuple
    values: tuple
    _index: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, '_index', {normal_form(phi): v for phi, v in zip(self.family, self.values)})

    def __call__(self, phi: Formula):
        """``p(phi)``.

        Raises:
            FamilyMiss: if ``phi`` is not in the family.
        """
        key = normal_form(phi)
        if key not in self._index:
            raise FamilyMiss(f"{pretty(phi)} is not in the family of this type.")
        return self._index[key]

    def __contains__(self, phi: Formula) -> bool:
        return normal_form(phi) in self._index

    def table(self) -> dict:
        return dict(zip(self.family, self.values))

    def extend(self, formulas) -> 'RealizedType':
        """The same type known on ``family + formulas``."""
        formulas = [phi for phi in formulas if phi not in self]
        return realized_type(self.structure, self.point, self.family + tuple(formulas), self.variables)

    def check_linearity(self) -> list:
        """Sums and scalings in the family whose value is not the combination of their parts' values.

        Only combinations whose parts are also in the family are checked.
        """
        failures = []
        for phi, value in zip(self.family, self.values):
            if isinstance(phi, Add) and phi.left in self and phi.right in self:
                if value != self(phi.left) + self(phi.right):
                    failures.append(phi)
            elif isinstance(phi, Scale) and phi.body in self:
                if value != phi.r * self(phi.body):
                    failures.append(phi)
        return failures

    def is_positive(self) -> bool:
        """``p(1) = 1`` and ``p(phi) >= 0`` for every ``phi`` of the family that is non-negative on the structure."""
        if ONE in self and self(ONE) != 1:
            return False
        tables = ValueTables(self.structure)
        for phi, value in zip(self.family, self.values):
            if value < 0 and tables.table(phi, self.variables).min() >= 0:
                return False
        return True


def realized_type(S: FiniteChargedStructure, point, family, variables=None) -> RealizedType:
    """The type of ``point`` in ``S`` on ``family``.

    Args:
        S (FiniteChargedStructure): a validated structure.
        point (tuple): point indices.
        family (list): formulas whose free variables are among ``variables``.
        variables (tuple, optional): defaults to ``('x',)`` for one point and ``x1, ..., xn`` otherwise.

    Raises:
        UnboundVariable: if a formula has a free variable outside ``variables``.
    """
    point = tuple(int(a) for a in point)
    variables = default_variables(len(point)) if variables is None else tuple(variables)
    assert len(variables) == len(point), "one variable per coordinate is required."
    tables = ValueTables(S)
    values = []
    for phi in family:
        extra = free_vars(phi) - set(variables)
        if extra:
            raise UnboundVariable(f"{pretty(phi)} has free variables {sorted(extra)} outside {list(variables)}.")
        values.append(tables.table(phi, variables)[point])
    return RealizedType(S, point, variables, tuple(family), tuple(values))


def plus_map(p: RealizedType, phi: Formula, y: str = 'y', extend: bool = False):
    """``p+(phi) = p(int y. phi)``.

    Args:
        p (RealizedType): a type in the variables ``x``.
        phi (Formula): a formula in ``x`` and ``y``.
        y (str, optional): the new variable. Defaults to ``'y'``.
        extend (bool, optional): evaluate ``int y. phi`` when it is not in the family. Defaults to ``False``.

    Raises:
        FamilyMiss: if ``int y. phi`` is not in the family and ``extend`` is off.
    """
    assert y not in p.variables, f"{y!r} must be a new variable."
    integral = Int(y, phi)
    if extend and integral not in p:
        p = p.extend([integral])
    return p(integral)


def type_table(S: FiniteChargedStructure, n: int, depth: int, sig: Signature = EMPTY_SIGNATURE,
               scalars=DEFAULT_SCALARS) -> tuple:
    """Depth-bounded types of all ``n``-tuples.

    Returns:
        tuple: ``(tuples, keys)``; ``keys[j]`` is the vector of values at ``tuples[j]`` of every formula
        of depth at most ``depth`` in ``n`` variables. Two tuples have the same depth-bounded type iff
        their keys are equal.
    """
    variables = default_variables(n)
    formulas = FormulaEnumerator(sig, scalars).up_to(depth, variables)
    tables = ValueTables(S)
    tuples = list(itertools.product(range(S.size), repeat=n))
    columns = [np.asarray(tables.table(phi, variables)).reshape(-1) for phi in formulas]
    keys = [tuple(c[j] for c in columns) for j in range(len(tuples))]
    return tuples, keys


def type_distance(S: FiniteChargedStructure, a, b, depth: int, sig: Signature = EMPTY_SIGNATURE,
                  scalars=DEFAULT_SCALARS) -> Fraction:
    """Distance of the types of ``a`` and ``b``: the least ``sum_i d(a'_i, b'_i)`` over tuples ``a'`` with
    the type of ``a`` and ``b'`` with the type of ``b``.

    Types are compared on every formula of depth at most ``depth``, which must be given explicitly.
    Only types realised in ``S`` are considered.
    """
    a, b = tuple(a), tuple(b)
    assert len(a) == len(b) and a, "tuples must be non-empty and of equal length."
    tuples, keys = type_table(S, len(a), depth, sig, scalars)
    key_a, key_b = keys[tuples.index(a)], keys[tuples.index(b)]
    realize_a = [t for t, k in zip(tuples, keys) if k == key_a]
    realize_b = [t for t, k in zip(tuples, keys) if k == key_b]
    return min(sum((S.metric[s, t] for s, t in zip(u, v)), S.scalar(0)) for u in realize_a for v in realize_b)
