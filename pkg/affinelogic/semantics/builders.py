"""Ready-made structures: the two-point space, discrete spaces, unit-interval grids and seeded
random structures that satisfy every constraint of :func:`validate_structure` by construction."""
import itertools
from fractions import Fraction

import numpy as np

from ..syntax.signature import EMPTY_SIGNATURE, Signature
from .structure import FiniteChargedStructure


def discrete_structure(n: int, charge=None, constants=None) -> FiniteChargedStructure:
    """``n`` points at mutual distance 1; uniform charge unless ``charge`` is given."""
    metric = [[Fraction(int(a != b)) for b in range(n)] for a in range(n)]
    charge = [Fraction(1, n)] * n if charge is None else charge
    return FiniteChargedStructure(list(range(n)), metric, charge, constants=constants)


def two_point_structure(charge=(Fraction(1, 2), Fraction(1, 2)), constants=None) -> FiniteChargedStructure:
    """The space ``{0, 1}`` with ``d(0, 1) = 1``, by default with ``μ(0) = μ(1) = 1/2``."""
    return discrete_structure(2, charge, constants)


def unit_interval_grid(n: int, exact: bool = True) -> FiniteChargedStructure:
    """The points ``k/(n-1)``, ``k = 0..n-1``, of the unit interval with the uniform charge ``1/n``.

    With ``exact=False`` the arrays are ``float64``: the fast path for fine grids, where a rational
    ``n x n`` metric is needlessly heavy.
    """
    assert n >= 2, "a grid needs at least two points."
    if exact:
        coords = [Fraction(k, n - 1) for k in range(n)]
        metric = [[abs(a - b) for b in coords] for a in coords]
        charge = [Fraction(1, n)] * n
    else:
        coords = np.linspace(0.0, 1.0, n)
        metric = np.abs(coords[:, None] - coords[None, :])
        charge = np.full(n, 1.0 / n)
    return FiniteChargedStructure([str(c) for c in coords], metric, charge, exact=exact)


def grid_point(S: FiniteChargedStructure, x) -> int:
    """Index of the grid point nearest to ``x``."""
    n = S.size
    return int(round(float(x) * (n - 1)))


def _random_rational(rng, denominator=4, low=1):
    return Fraction(rng.randint(low, denominator + 1), denominator)


def random_metric(rng: np.random.RandomState, n: int, denominator: int = 4) -> list:
    """A random rational metric with values in ``(0, 1]``.

    Random edge weights are closed under shortest paths (Floyd-Warshall), which yields the triangle
    inequality while keeping every distance positive and at most 1.
    """
    metric = [[Fraction(0) if a == b else None for b in range(n)] for a in range(n)]
    for a, b in itertools.combinations(range(n), 2):
        metric[a][b] = metric[b][a] = _random_rational(rng, denominator)
    for c, a, b in itertools.product(range(n), repeat=3):
        if metric[a][c] + metric[c][b] < metric[a][b]:
            metric[a][b] = metric[a][c] + metric[c][b]
    return metric


def random_charge(rng: np.random.RandomState, n: int, allow_zero: bool = True) -> list:
    weights = [Fraction(rng.randint(0 if allow_zero else 1, 4)) for _ in range(n)]
    if sum(weights) == 0:
        weights[rng.randint(n)] = Fraction(1)
    total = sum(weights)
    return [w / total for w in weights]


def _mcshane(values, metric, lipschitz):
    # smallest λ-Lipschitz majorant of values; stays in [min values, max values]
    n = len(metric)
    return [min(values[b] + lipschitz * metric[a][b] for b in range(n)) for a in range(n)]


def random_structure(rng: np.random.RandomState, sig: Signature = EMPTY_SIGNATURE, max_points: int = 4,
                     min_points: int = 1, denominator: int = 4) -> FiniteChargedStructure:
    """A random structure over ``sig`` that passes :func:`validate_structure`.

    The metric comes from :func:`random_metric`. Relations of arity 1 are McShane extensions of
    random values in ``[0, 1]``, hence ``λ_R``-Lipschitz; higher arities average one such function
    per coordinate. Functions are the
    identity on the first argument when ``λ_F >= 1`` and constant maps otherwise.

    Args:
        rng (np.random.RandomState): the source of randomness.
        sig (Signature): the signature. Defaults to the empty signature.
        max_points (int): largest carrier. Defaults to ``4``.
        min_points (int): smallest carrier. Defaults to ``1``.
        denominator (int): denominator of random distances and values. Defaults to ``4``.
    """
    n = rng.randint(min_points, max_points + 1)
    metric = random_metric(rng, n, denominator)
    charge = random_charge(rng, n)
    constants = {c: int(rng.randint(n)) for c in sig.constants}

    functions = {}
    for symbol in sig.functions:
        if symbol.lipschitz >= 1 and rng.rand() < 0.5:
            table = np.zeros((n, ) * symbol.arity, dtype=np.int64)
            for args in itertools.product(range(n), repeat=symbol.arity):
                table[args] = args[0]
        else:
            table = np.full((n, ) * symbol.arity, rng.randint(n), dtype=np.int64)
        functions[symbol.name] = table

    relations = {}
    for symbol in sig.relations:
        columns = []
        for _ in range(symbol.arity):
            values = [Fraction(rng.randint(0, denominator + 1), denominator) for _ in range(n)]
            columns.append(_mcshane(values, metric, symbol.lipschitz))
        table = np.empty((n, ) * symbol.arity, dtype=object)
        for args in itertools.product(range(n), repeat=symbol.arity):
            # the mean of λ-Lipschitz coordinate functions is λ-Lipschitz for the sum metric
            table[args] = sum((columns[i][a] for i, a in enumerate(args)), Fraction(0)) / symbol.arity
        relations[symbol.name] = table

    return FiniteChargedStructure(list(range(n)), metric, charge, constants, functions, relations)


def random_weights(rng: np.random.RandomState, m: int, denominator: int = 4) -> list:
    """``m`` random multiples of ``1/denominator`` summing to 1."""
    cuts = sorted(rng.randint(0, denominator + 1) for _ in range(m - 1))
    bounds = [0] + cuts + [denominator]
    return [Fraction(bounds[i + 1] - bounds[i], denominator) for i in range(m)]



def weight_grid(m: int, denominator: int = 4) -> list:
    """Every ``m``-tuple of multiples of ``1/denominator`` summing to 1, in lexicographic order."""
    return [tuple(Fraction(k, denominator) for k in ks)
            for ks in itertools.product(range(denominator + 1), repeat=m) if sum(ks) == denominator]


def structure_catalogue(max_points: int = 3, distances=(1, ), denominator: int = 4) -> list:
    """Every structure over the empty signature with at most ``max_points`` points, one per isomorphism class,
    whose distances between distinct points lie in ``distances`` and whose charges are multiples of
    ``1/denominator``.

    Metrics violating the triangle inequality are skipped, so the catalogue passes
    :func:`validate_structure` as a whole.

    Args:
        max_points (int): largest carrier. Defaults to ``3``.
        distances (tuple): positive rationals allowed as distances. Defaults to ``(1, )``.
        denominator (int): denominator of the charges. Defaults to ``4``.
    """
    distances = sorted({Fraction(d) for d in distances})
    assert distances and distances[0] > 0, "distances between distinct points must be positive."
    seen, catalogue = set(), []
    for n in range(1, max_points + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for values in itertools.product(distances, repeat=len(pairs)):
            metric = [[Fraction(0)] * n for _ in range(n)]
            for (a, b), v in zip(pairs, values):
                metric[a][b] = metric[b][a] = v
            if any(metric[a][b] > metric[a][c] + metric[c][b] for a, b, c in itertools.product(range(n), repeat=3)):
                continue
            for charge in weight_grid(n, denominator):
                key = min((tuple(metric[p[a]][p[b]] for a in range(n) for b in range(n)), tuple(charge[a] for a in p))
                          for p in itertools.permutations(range(n)))
                if key in seen:
                    continue
                seen.add(key)
                catalogue.append(FiniteChargedStructure(list(range(n)), metric, list(charge)))
    return catalogue
