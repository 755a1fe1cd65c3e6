import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..common.errors import Infeasible, OpenCondition
from ..parser.printer import pretty_condition
from ..semantics.evaluation import check_condition
from ..semantics.tables import ValueTables
from ..syntax.signature import EMPTY_SIGNATURE, Signature
from ..ultramean.charge_space import UltrachargeSpace
from ..ultramean.construction import build_ultramean
from .lp import choose_method, feasible_mixture

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MixtureProblem:
    """A finite model family and a theory of sentences.

    Attributes:
        models (tuple): the structures ``M_1, ..., M_m``.
        theory (tuple): the conditions ``phi_j <= psi_j``.
        gaps (np.ndarray): ``(m, k)`` array of ``psi_j - phi_j`` evaluated in ``M_i``.
    """
    models: tuple
    theory: tuple
    gaps: np.ndarray

    @classmethod
    def build(cls, models, theory) -> 'MixtureProblem':
        """
        Raises:
            OpenCondition: if a condition of ``theory`` has free variables.
        """
        models, theory = tuple(models), tuple(theory)
        assert models, "at least one model is required."
        for cond in theory:
            if not cond.is_sentence():
                raise OpenCondition(f"{pretty_condition(cond)} has free variables {sorted(cond.free_vars())}.")
        gaps = np.empty((len(models), len(theory)), dtype=object)
        for i, M in enumerate(models):
            tables = ValueTables(M)
            for j, cond in enumerate(theory):
                gaps[i, j] = tables.table(cond.rhs, ())[()] - tables.table(cond.lhs, ())[()]
        return cls(models, theory, gaps)


@dataclass(frozen=True)
class MixtureSolution:
    """Weights of a mixture satisfying the theory, with the margins it has in the ultramean."""
    weights: UltrachargeSpace
    method: str
    margins: tuple


def solve_mixture(models, theory, sig: Signature = EMPTY_SIGNATURE, method: str = 'auto',
                  product_cap: int or None = None) -> MixtureSolution:
    """Finds weights ``w`` such that the ultramean of ``models`` under ``w`` satisfies ``theory``.

    By the ultramean theorem the value of a sentence in the ultramean is the ``w``-average of its
    values in the factors, so the weights are found by exact linear feasibility:
    ``w >= 0, sum(w) = 1`` and ``sum_i w_i (psi_j - phi_j)(M_i) >= 0`` for every condition ``j``.
    The ultramean is then built and every condition checked in it before returning.

    Args:
        models (list): validated structures over ``sig``.
        theory (list): conditions between sentences.
        sig (Signature, optional): the signature. Defaults to the empty signature.
        method (str, optional): ``'fourier-motzkin'``, ``'simplex'`` or ``'auto'`` (Fourier-Motzkin up to
            4 models and 4 conditions). Defaults to ``'auto'``.
        product_cap (int, optional): cap of the ultramean product built for the check.

    Returns:
        MixtureSolution: the weights, the method used and the margins in the ultramean.

    Raises:
        OpenCondition: if a condition has free variables.
        Infeasible: if no mixture of THIS family satisfies the theory. Other models may.
    """
    problem = MixtureProblem.build(models, theory)
    m, k = problem.gaps.shape
    if k == 0:
        ws, method = UltrachargeSpace.uniform(m), 'none'
    else:
        method = choose_method(m, k) if method == 'auto' else method
        w = feasible_mixture(problem.gaps.tolist(), method)
        if w is None:
            raise Infeasible(f"no mixture of the {m} given models satisfies the theory.")
        ws = UltrachargeSpace(tuple(Fraction(x) for x in w))
    N = build_ultramean(sig, ws, problem.models, product_cap, validate=False)
    tables = ValueTables(N)
    margins = tuple(check_condition(N, cond, tables)[1] for cond in problem.theory)
    assert all(margin >= 0 for margin in margins), f"mixture {ws.weights} fails in its ultramean: {margins}"
    logger.info("mixture found with %s: %s", method, [str(x) for x in ws.weights])
    return MixtureSolution(ws, method, margins)
