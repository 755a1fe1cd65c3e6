import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from tqdm import tqdm

from ..common.abc_checker import StructureChecker
from ..semantics.structure import FiniteChargedStructure
from ..semantics.tables import ValueTables
from ..syntax.formulas import ONE, Add, Dist, Formula, Int, Scale, free_vars
from ..syntax.signature import EMPTY_SIGNATURE, Signature
from ..syntax.terms import Term, Var, term_vars
from .charge_space import UltrachargeSpace
from .construction import Ultramean, construct_ultramean

logger = logging.getLogger(__name__)


class LosChecker(StructureChecker):
    """Checks the ultramean theorem on a family of formulas.

    For a formula ``φ(x1, ..., xk)`` and tuples ``a^1, ..., a^k`` of the product, the value of ``φ``
    at the classes ``[a^1], ..., [a^k]`` of the ultramean must equal ``Σ_i w_i φ^{M_i}(a^1_i, ..., a^k_i)``.
    The check is exact: every residual must be 0.
    """

    def __init__(self, sig: Signature, ws: UltrachargeSpace, models, product_cap: int or None = None,
                 progress: bool = False, ultramean: Ultramean or None = None):
        super().__init__(sig, progress)
        self.ws = ws
        self.models = list(models)
        self.ultramean = ultramean or construct_ultramean(sig, ws, self.models, product_cap, validate=False)
        self.tables = ValueTables(self.ultramean.structure)
        self.factor_tables = [ValueTables(M) for M in self.models]

    def residuals(self, phi: Formula, tuple_choices=None, variables=None) -> np.ndarray:
        """Absolute residuals of the theorem for ``phi``.

        Args:
            phi (Formula): the formula.
            tuple_choices (list, optional): environments mapping each variable to a tuple of factor
                points; all raw product tuples when ``None``.
            variables (tuple, optional): the variables, default the sorted free variables of ``phi``.

        Returns:
            np.ndarray: one residual per choice (all raw tuples: shape ``(N,) * k``).
        """
        variables = tuple(sorted(free_vars(phi))) if variables is None else tuple(variables)
        U = self.ultramean
        table = self.tables.table(phi, variables)
        factor_tables = [t.table(phi, variables) for t in self.factor_tables]
        if tuple_choices is None:
            coords = U.coordinates()
            proj = np.array(U.projection)
            left = table[np.ix_(*[proj] * len(variables))] if variables else table
            right = np.full(left.shape, Fraction(0), dtype=object)
            for i, (w, t) in enumerate(zip(self.ws.weights, factor_tables)):
                column = coords[:, i]
                right = right + w * (t[np.ix_(*[column] * len(variables))] if variables else t)
            return np.abs(np.asarray(left - right, dtype=object))
        out = []
        for choice in tuple_choices:
            point = tuple(U.class_of(choice[v]) for v in variables)
            factor_values = [t[tuple(choice[v][i] for v in variables)] for i, t in enumerate(factor_tables)]
            out.append(abs(table[point] - self.ws.integrate(factor_values)))
        return np.array(out, dtype=object)

    def check(self, formulas, tuple_choices=None) -> dict:
        """
        Args:
            formulas (list): formulas to check.
            tuple_choices (list, optional): as in :meth:`residuals`.

        Returns:
            dict: ``max_residual`` (Fraction), ``failures`` (list of ``(formula, residual)``) and
            ``checked`` (number of formula/tuple pairs).
        """
        worst, failures, checked = Fraction(0), [], 0
        for phi in tqdm(formulas, leave=True, position=0, disable=not self.progress):
            residuals = self.residuals(phi, tuple_choices)
            checked += residuals.size
            top = residuals.max() if residuals.size else Fraction(0)
            if top != 0:
                failures.append((phi, top))
                logger.warning("ultramean theorem fails for %r with residual %s", phi, top)
            worst = max(worst, top)
        return {'max_residual': worst, 'failures': failures, 'checked': checked}


def verify_ultramean_theorem(sig: Signature, ws: UltrachargeSpace, models, phi: Formula, tuple_choices=None,
                             product_cap: int or None = None) -> Fraction:
    """Largest residual of the ultramean theorem for ``phi`` over ``tuple_choices``.

    Args:
        sig (Signature): the signature.
        ws (UltrachargeSpace): the weights.
        models (list): the factors.
        phi (Formula): the formula.
        tuple_choices (list, optional): environments mapping each free variable of ``phi`` to a tuple
            with one point per factor. Defaults to every raw product tuple.
        product_cap (int, optional): as in :func:`construct_ultramean`.

    Returns:
        Fraction: the maximal residual, 0 when the theorem holds.
    """
    residuals = LosChecker(sig, ws, models, product_cap).residuals(phi, tuple_choices)
    return residuals.max() if residuals.size else Fraction(0)


def sample_choices(rng: np.random.RandomState, models, variables, count: int) -> list:
    """``count`` random environments assigning each variable one point per factor."""
    return [{v: tuple(int(rng.randint(M.size)) for M in models) for v in variables} for _ in range(count)]


@dataclass(frozen=True)
class DiagonalReport:
    """The diagonal map ``a ↦ [(a, ..., a)]`` with the outcome of the elementarity checks.

    Attributes:
        mapping (tuple): image of every point.
        failures (list): ``(formula, tuple, value in M, value in the powermean)`` entries.
        checked (int): number of formula/tuple pairs compared.
    """
    mapping: tuple
    failures: list
    checked: int

    @property
    def holds(self) -> bool:
        return not self.failures


def diagonal_embedding(M: FiniteChargedStructure, ws: UltrachargeSpace, family=(),
                       sig: Signature = EMPTY_SIGNATURE, product_cap: int or None = None) -> DiagonalReport:
    """The diagonal map from ``M`` into its powermean, checked on a family of formulas.

    For every formula of ``family`` and every tuple of ``M``, the value in ``M`` is compared with
    the value at the diagonal images in the powermean.
    """
    U = construct_ultramean(sig, ws, [M] * ws.size, product_cap, validate=False)
    mapping = tuple(U.class_of((a, ) * ws.size) for a in range(M.size))
    tables_m, tables_u = ValueTables(M), ValueTables(U.structure)
    failures, checked = [], 0
    diag = np.array(mapping)
    for phi in family:
        variables = tuple(sorted(free_vars(phi)))
        left = tables_m.table(phi, variables)
        right = tables_u.table(phi, variables)
        if variables:
            right = right[np.ix_(*[diag] * len(variables))]
        checked += left.size
        for index in zip(*np.nonzero(np.asarray(left != right))) if variables else ([()] if left != right else []):
            failures.append((phi, tuple(int(a) for a in index), left[index], right[index]))
    return DiagonalReport(mapping, failures, checked)


def atom_charge_formula(a: Term = Var('a'), x: str = 'x') -> Formula:
    """``∫(1 - d(x, a)) dx``.

    In a structure whose metric only takes the values 0 and 1 this reads the charge of the atom
    ``a``. Under a general metric it does not: in the powermean of the two-point structure with
    weights ``(1/2, 1/2)`` every atom has charge 1/4 while the integral is 1/2.
    """
    assert x not in term_vars(a), f"{x!r} would capture a variable of {a!r}."
    return Int(x, Add(ONE, Scale(Fraction(-1), Dist(Var(x), a))))
