import logging
from dataclasses import dataclass

import numpy as np
from tqdm import tqdm

from ..common.abc_checker import StructureChecker
from ..common.errors import BudgetExceeded, SizeMismatch
from ..parser.printer import pretty
from ..semantics.structure import FiniteChargedStructure
from ..semantics.tables import ValueTables
from ..syntax.enumeration import DEFAULT_SCALARS, FormulaEnumerator
from ..syntax.signature import EMPTY_SIGNATURE, Signature
from .types import default_variables

logger = logging.getLogger(__name__)

DEFAULT_TUPLE_BUDGET = 10**7


@dataclass(frozen=True)
class ElementaryReport:
    """Outcome of a bounded elementarity check.

    Attributes:
        violations (list): ``(formula, tuple of M, value in M, value in N)`` entries.
        formulas (int): number of formulas enumerated.
        checked (int): number of formula/tuple pairs compared.
        depth (int): the depth bound.
    """
    violations: list
    formulas: int
    checked: int
    depth: int

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            'holds': self.holds,
            'depth': self.depth,
            'formulas': self.formulas,
            'checked': self.checked,
            'violations': [{'formula': pretty(phi), 'tuple': list(a), 'M': vm, 'N': vn}
                           for phi, a, vm, vn in self.violations]
        }


class ElementaryChecker(StructureChecker):
    """Compares ``φ^M(ā)`` with ``φ^N(f(ā))`` for every formula up to a depth and every tuple of ``M``.

    An empty report means that ``f`` preserves the value of every formula of depth at most ``depth``
    built from the given scalars. The comparison is exact.

    Args:
        sig (Signature): the common signature.
        depth (int): AST depth bound, atoms have depth 1.
        arity (int, optional): length of the tuples. Defaults to 1.
        scalars (tuple, optional): scalars of the enumeration. Defaults to ``(-1, 0, 1/2, 1)``.
        budget (int, optional): largest allowed number of formula/tuple pairs.
        progress (bool, optional): show a progress bar over formulas.
    """

    def __init__(self, sig: Signature, depth: int, arity: int = 1, scalars=DEFAULT_SCALARS,
                 budget: int = DEFAULT_TUPLE_BUDGET, progress: bool = False):
        super().__init__(sig, progress)
        assert depth >= 1, "the depth bound must be at least 1."
        self.depth = depth
        self.arity = arity
        self.budget = budget
        self.variables = default_variables(arity) if arity else ()
        self.formulas = FormulaEnumerator(sig, scalars).up_to(depth, self.variables)

    def check(self, M: FiniteChargedStructure, N: FiniteChargedStructure, f,
              budget: int or None = None) -> ElementaryReport:
        """
        Args:
            M (FiniteChargedStructure): the domain.
            N (FiniteChargedStructure): the codomain.
            f (list): image in ``N`` of every point of ``M``.
            budget (int, optional): overrides the budget given at construction.

        Raises:
            SizeMismatch: if ``f`` does not map every point of ``M`` into ``N``.
            BudgetExceeded: if the enumeration exceeds ``budget``.
        """
        budget = self.budget if budget is None else budget
        f = np.asarray(f, dtype=np.int64)
        if f.shape != (M.size, ) or (f.size and (f.min() < 0 or f.max() >= N.size)):
            raise SizeMismatch(f"the map must send the {M.size} points of M to points of N.")
        total = len(self.formulas) * M.size**self.arity
        if total > budget:
            raise BudgetExceeded(f"{len(self.formulas)} formulas x {M.size ** self.arity} tuples exceeds "
                                 f"the budget of {budget}.")
        logger.debug("elementary check: %d formulas over %d tuples", len(self.formulas), M.size**self.arity)
        tables_m, tables_n = ValueTables(M), ValueTables(N)
        k = len(self.variables)
        violations, checked = [], 0
        for phi in tqdm(self.formulas, leave=True, position=0, disable=not self.progress):
            left = tables_m.table(phi, self.variables)
            right = tables_n.table(phi, self.variables)
            right = right[np.ix_(*[f] * k)] if k else right
            checked += left.size
            differs = np.asarray(left != right, dtype=bool).reshape(left.shape)
            for index in np.argwhere(differs):
                index = tuple(int(a) for a in index)
                violations.append((phi, index, left[index], right[index]))
        return ElementaryReport(violations, len(self.formulas), checked, self.depth)


def bounded_elementary_check(M: FiniteChargedStructure, N: FiniteChargedStructure, f, depth: int,
                             sig: Signature = EMPTY_SIGNATURE, arity: int = 1, scalars=DEFAULT_SCALARS,
                             budget: int = DEFAULT_TUPLE_BUDGET) -> ElementaryReport:
    """Checks that ``f: M -> N`` is elementary up to formulas of depth ``depth`` in ``arity`` variables.

    Both structures are assumed validated over ``sig``.

    Raises:
        BudgetExceeded: if the enumeration exceeds ``budget`` formula/tuple pairs.
    """
    return ElementaryChecker(sig, depth, arity, scalars).check(M, N, f, budget)
