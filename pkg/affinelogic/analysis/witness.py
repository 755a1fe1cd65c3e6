from dataclasses import dataclass

import numpy as np

from ..common.errors import UnboundVariable
from ..parser.printer import pretty
from ..semantics.structure import FiniteChargedStructure
from ..semantics.tables import ValueTables
from ..syntax.formulas import Formula, free_vars


@dataclass(frozen=True)
class WitnessReport:
    """Witnesses of ``inf x. φ`` and ``sup x. φ`` and mean-value points of ``int x. φ``.

    Attributes:
        formula (Formula): ``φ``.
        var (str): the variable ``x``.
        values (tuple): ``φ`` at every point.
        inf, sup, mean: the three quantified values.
        inf_witnesses (tuple): points ``c`` with ``φ(c) = inf x. φ``.
        sup_witnesses (tuple): points ``c`` with ``φ(c) = sup x. φ``.
        mean_points (tuple): points ``c`` with ``φ(c) = int x. φ``; possibly empty.
    """
    formula: Formula
    var: str
    values: tuple
    inf: object
    sup: object
    mean: object
    inf_witnesses: tuple
    sup_witnesses: tuple
    mean_points: tuple

    @property
    def has_mean_value(self) -> bool:
        return bool(self.mean_points)

    def to_dict(self) -> dict:
        return {
            'formula': pretty(self.formula),
            'var': self.var,
            'inf': self.inf,
            'sup': self.sup,
            'mean': self.mean,
            'inf_witnesses': list(self.inf_witnesses),
            'sup_witnesses': list(self.sup_witnesses),
            'mean_points': list(self.mean_points)
        }


def witnesses(S: FiniteChargedStructure, phi: Formula, var: str = 'x', env=None) -> WitnessReport:
    """Points of ``S`` where ``phi`` attains its infimum, its supremum and its integral over ``var``.

    On a finite structure the infimum and the supremum are always attained; a point with
    ``φ(c) = ∫φ dx`` need not exist.

    Args:
        S (FiniteChargedStructure): the structure.
        phi (Formula): the formula.
        var (str, optional): the quantified variable. Defaults to ``'x'``.
        env (dict, optional): values of the other free variables.

    Raises:
        UnboundVariable: if ``env`` misses a free variable of ``phi`` other than ``var``.
    """
    env = dict(env or {})
    params = tuple(sorted(free_vars(phi) - {var}))
    missing = [v for v in params if v not in env]
    if missing:
        raise UnboundVariable(f"no value for {missing} in {pretty(phi)}.")
    table = ValueTables(S).table(phi, params + (var, ))
    column = table[tuple(env[v] for v in params)]
    low, high = column.min(), column.max()
    mean = (column * S.charge).sum()
    return WitnessReport(phi, var, tuple(column), low, high, mean,
                         tuple(int(c) for c in np.flatnonzero(column == low)),
                         tuple(int(c) for c in np.flatnonzero(column == high)),
                         tuple(int(c) for c in np.flatnonzero(column == mean)))
