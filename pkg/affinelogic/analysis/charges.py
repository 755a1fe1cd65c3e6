import itertools
import logging

import numpy as np
from tqdm import tqdm

from ..common.abc_checker import StructureChecker
from ..semantics.structure import FiniteChargedStructure
from ..semantics.tables import ValueTables
from ..syntax.formulas import Formula, Int, free_vars
from ..syntax.signature import EMPTY_SIGNATURE, Signature

logger = logging.getLogger(__name__)


def product_charge(S: FiniteChargedStructure, n: int) -> np.ndarray:
    """The ``(n,) * n`` array ``μ(a1)···μ(an)``."""
    out = np.full((1, ) * n, S.one, dtype=S.dtype)
    for i in range(n):
        out = out * S.charge.reshape(tuple(S.size if j == i else 1 for j in range(n)))
    return out


def iterated_charge(S: FiniteChargedStructure, phi: Formula, variables=None):
    """``μ_n(φ)``: the integral of ``phi`` over ``S^n`` against the product charge.

    Computed directly as ``Σ μ(a1)···μ(an) φ(a1, ..., an)`` over all tuples, not by nesting ``int``.

    Args:
        S (FiniteChargedStructure): the structure.
        phi (Formula): a formula whose free variables are among ``variables``.
        variables (tuple, optional): the integration variables. Defaults to the sorted free variables.

    Returns:
        the value, a ``Fraction`` on exact structures.
    """
    variables = tuple(sorted(free_vars(phi))) if variables is None else tuple(variables)
    table = ValueTables(S).table(phi, variables)
    return (table * product_charge(S, len(variables))).sum() if variables else table[()]


def nest_integrals(phi: Formula, variables) -> Formula:
    """``int v1. int v2. ... int vn. phi``, the first variable outermost."""
    for v in reversed(tuple(variables)):
        phi = Int(v, phi)
    return phi


def check_fubini(S: FiniteChargedStructure, phi: Formula, x: str = 'x', y: str = 'y', assignments=None) -> dict:
    """Compares ``int x. int y. phi`` with ``int y. int x. phi``.

    Args:
        S (FiniteChargedStructure): the structure.
        phi (Formula): a formula in ``x``, ``y`` and parameters ``z̄``.
        x (str, optional): Defaults to ``'x'``.
        y (str, optional): Defaults to ``'y'``.
        assignments (list, optional): dicts from the parameters to points. Every assignment of the
            parameters when ``None``.

    Returns:
        dict: ``{'max_residual', 'xy', 'yx', 'checked'}`` where ``xy`` and ``yx`` are the two value
        tables over the parameters.
    """
    params = tuple(sorted(free_vars(phi) - {x, y}))
    tables = ValueTables(S)
    xy = tables.table(Int(x, Int(y, phi)), params)
    yx = tables.table(Int(y, Int(x, phi)), params)
    if assignments is None:
        residual = np.abs(np.asarray(xy - yx, dtype=object))
        checked = residual.size
        max_residual = residual.max() if params else residual[()]
    else:
        residuals = [abs(xy[tuple(a[p] for p in params)] - yx[tuple(a[p] for p in params)]) for a in assignments]
        checked = len(residuals)
        max_residual = max(residuals, default=S.scalar(0))
    return {'max_residual': max_residual, 'xy': xy, 'yx': yx, 'checked': checked}


class FubiniChecker(StructureChecker):
    """Finite Fubini over many (structure, formula) pairs.

    Each case names the two variables to integrate. Only that order is swapped: ``int x. int y. phi`` is
    compared with ``int y. int x. phi`` under every assignment of the remaining free variables, which stay
    parameters. :func:`check_permutations` covers every order of a formula's variables. On finite
    structures every residual is exactly 0.
    """

    def __init__(self, sig: Signature = EMPTY_SIGNATURE, progress: bool = False):
        super().__init__(sig, progress)

    def check(self, cases) -> dict:
        """
        Args:
            cases (list): ``(structure, formula, x, y)`` tuples.

        Returns:
            dict: ``{'max_residual', 'failures', 'checked'}``; a failure is ``(index, residual)``.
        """
        failures, max_residual, checked = [], 0, 0
        for index, (S, phi, x, y) in enumerate(tqdm(cases, leave=True, position=0, disable=not self.progress)):
            report = check_fubini(S, phi, x, y)
            checked += report['checked']
            residual = report['max_residual']
            max_residual = max(max_residual, residual)
            if residual != 0:
                failures.append((index, residual))
        logger.info("fubini: %d cases, %d assignments, %d failures", len(cases), checked, len(failures))
        return {'max_residual': max_residual, 'failures': failures, 'checked': checked}


def check_permutations(S: FiniteChargedStructure, phi: Formula, variables=None) -> list:
    """Values of the nested integral of ``phi`` for every order of ``variables``; all equal on finite structures."""
    variables = tuple(sorted(free_vars(phi))) if variables is None else tuple(variables)
    tables = ValueTables(S)
    return [tables.table(nest_integrals(phi, order), ())[()] for order in itertools.permutations(variables)]
