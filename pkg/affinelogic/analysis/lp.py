"""Exact linear feasibility over the rationals.

Both methods decide whether ``{x >= 0 : A x = b}`` is non-empty and return a point of it. They work
on :class:`fractions.Fraction` entries only, so the answer is exact.
"""
import logging
from fractions import Fraction

logger = logging.getLogger(__name__)

SIMPLEX = 'simplex'
FOURIER_MOTZKIN = 'fourier-motzkin'


class FeasibilityTableau:
    """Phase-1 simplex tableau for ``A x = b, x >= 0``.

    One artificial variable per row starts in the basis and the sum of the artificials is
    minimised. Pivots follow Bland's rule (smallest entering index, ties in the ratio test broken by
    the smallest basic index), which rules out cycling.

    Args:
        A (list): ``m x n`` matrix of rationals.
        b (list): ``m`` rationals.
    """

    def __init__(self, A, b):
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.rows = []
        self.rhs = []
        for row, value in zip(A, b):
            sign = -1 if value < 0 else 1
            self.rows.append([Fraction(sign * a) for a in row] + [Fraction(int(i == len(self.rows)))
                                                                   for i in range(self.m)])
            self.rhs.append(Fraction(sign * value))
        self.basis = [self.n + i for i in range(self.m)]
        width = self.n + self.m
        # reduced costs of the phase-1 objective sum(artificials)
        self.cost = [-sum((r[j] for r in self.rows), Fraction(0)) if j < self.n else Fraction(0) for j in range(width)]
        self.objective = sum(self.rhs, Fraction(0))
        self.pivots = 0

    def pivot(self, i, j):
        piv = self.rows[i][j]
        self.rows[i] = [a / piv for a in self.rows[i]]
        self.rhs[i] /= piv
        for k in range(self.m):
            f = self.rows[k][j]
            if k != i and f != 0:
                self.rows[k] = [a - f * p for a, p in zip(self.rows[k], self.rows[i])]
                self.rhs[k] -= f * self.rhs[i]
        f = self.cost[j]
        self.cost = [c - f * p for c, p in zip(self.cost, self.rows[i])]
        self.objective += f * self.rhs[i]
        self.basis[i] = j
        self.pivots += 1

    def step(self) -> bool:
        entering = [j for j, c in enumerate(self.cost) if c < 0]
        if not entering:
            return False
        j = entering[0]
        candidates = [(self.rhs[i] / self.rows[i][j], self.basis[i], i) for i in range(self.m) if self.rows[i][j] > 0]
        # the phase-1 objective is bounded below by 0
        assert candidates, "phase-1 problem reported unbounded."
        _, _, i = min(candidates)
        self.pivot(i, j)
        return True

    def solve(self):
        """A feasible ``x`` as a list of rationals, or ``None``."""
        while self.step():
            pass
        logger.debug("phase-1 simplex finished after %d pivots, residual %s", self.pivots, self.objective)
        if self.objective != 0:
            return None
        x = [Fraction(0)] * self.n
        for i, j in enumerate(self.basis):
            if j < self.n:
                x[j] = self.rhs[i]
        return x


def simplex_feasible(A, b):
    """A point of ``{x >= 0 : A x = b}`` or ``None``."""
    if not A:
        return None
    return FeasibilityTableau(A, b).solve()


def _combine(p, q, k):
    # positive combination of p (coefficient > 0 at k) and q (< 0 at k) cancelling variable k
    (a, c), (b, d) = p, q
    u, v = -b[k], a[k]
    return [u * x + v * y for x, y in zip(a, b)], u * c + v * d


def fourier_motzkin(inequalities, dimension: int):
    """Solves ``a·x + c >= 0`` for every ``(a, c)`` of ``inequalities`` by Fourier-Motzkin elimination.

    Variables are eliminated in index order; the point is rebuilt backwards, taking for each
    variable its largest lower bound (its smallest upper bound when it has no lower bound, 0 when it
    is free).

    Returns:
        list: a solution of ``dimension`` rationals, or ``None`` if the system is infeasible.
    """
    systems = [[([Fraction(a) for a in row], Fraction(c)) for row, c in inequalities]]
    for k in range(dimension):
        current = systems[-1]
        lower = [q for q in current if q[0][k] > 0]
        upper = [q for q in current if q[0][k] < 0]
        rest = [q for q in current if q[0][k] == 0]
        systems.append(rest + [_combine(p, q, k) for p in lower for q in upper])
    if any(c < 0 for _, c in systems[-1]):
        return None
    x = [Fraction(0)] * dimension
    for k in range(dimension - 1, -1, -1):
        lows, highs = [], []
        for a, c in systems[k]:
            if a[k] == 0:
                continue
            bound = -(c + sum(a[l] * x[l] for l in range(k + 1, dimension))) / a[k]
            (lows if a[k] > 0 else highs).append(bound)
        if lows:
            x[k] = max(lows)
        elif highs:
            x[k] = min(highs)
    logger.debug("Fourier-Motzkin: %d inequalities after elimination", len(systems[-1]))
    return x


def simplex_mixture(gaps):
    """``w >= 0`` with ``sum(w) = 1`` and ``sum_i w_i gaps[i][j] >= 0`` for every ``j``, by phase-1 simplex."""
    m = len(gaps)
    k = len(gaps[0]) if m else 0
    # columns: w_1 .. w_m, then one surplus per condition
    A = [[Fraction(1)] * m + [Fraction(0)] * k]
    for j in range(k):
        A.append([Fraction(gaps[i][j]) for i in range(m)] + [Fraction(-int(l == j)) for l in range(k)])
    b = [Fraction(1)] + [Fraction(0)] * k
    x = simplex_feasible(A, b)
    return None if x is None else x[:m]


def fourier_motzkin_mixture(gaps):
    """Same problem as :func:`simplex_mixture`, solved by eliminating ``w_m = 1 - w_1 - ... - w_{m-1}``."""
    m = len(gaps)
    k = len(gaps[0]) if m else 0
    d = m - 1
    inequalities = [([Fraction(int(l == i)) for l in range(d)], Fraction(0)) for i in range(d)]
    inequalities.append(([Fraction(-1)] * d, Fraction(1)))
    for j in range(k):
        last = Fraction(gaps[m - 1][j])
        inequalities.append(([Fraction(gaps[i][j]) - last for i in range(d)], last))
    x = fourier_motzkin(inequalities, d)
    if x is None:
        return None
    return x + [1 - sum(x, Fraction(0))]


def choose_method(n_models: int, n_conditions: int) -> str:
    """Fourier-Motzkin for at most 4 models and 4 conditions, the simplex method otherwise."""
    return FOURIER_MOTZKIN if n_models <= 4 and n_conditions <= 4 else SIMPLEX


def feasible_mixture(gaps, method: str = 'auto'):
    """Weights ``w`` of a mixture with ``sum_i w_i gaps[i][j] >= 0`` for all ``j``, or ``None``.

    Args:
        gaps (list): ``gaps[i][j]`` is ``psi_j - phi_j`` evaluated in model ``i``.
        method (str, optional): ``'simplex'``, ``'fourier-motzkin'`` or ``'auto'``. Defaults to ``'auto'``.
    """
    assert gaps, "at least one model is required."
    if method == 'auto':
        method = choose_method(len(gaps), len(gaps[0]))
    assert method in (SIMPLEX, FOURIER_MOTZKIN), f"unknown method {method!r}"
    logger.debug("solving a mixture of %d models, %d conditions with %s", len(gaps), len(gaps[0]), method)
    return simplex_mixture(gaps) if method == SIMPLEX else fourier_motzkin_mixture(gaps)
