import itertools
import logging

import numpy as np

from ..common.errors import IllDefinedQuotient
from ..syntax.signature import Signature
from .structure import FiniteChargedStructure

logger = logging.getLogger(__name__)


class DisjointSet:
    """Union-find over ``range(n)`` with path compression and union by rank.

    The root of every class is kept at its smallest element so that class representatives do not
    depend on the order of the unions.
    """

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    # find with path compression
    def find(self, e: int) -> int:
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    # union by rank, smallest element stays root of equal-rank merges
    def union(self, x: int, y: int):
        x_root, y_root = self.find(x), self.find(y)
        if x_root == y_root:
            return
        if self.rank[x_root] < self.rank[y_root] or (self.rank[x_root] == self.rank[y_root] and y_root < x_root):
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        if self.rank[x_root] == self.rank[y_root]:
            self.rank[x_root] += 1

    def classes(self) -> list:
        """Classes as sorted lists, ordered by their smallest element."""
        groups = {}
        for e in range(len(self.parent)):
            groups.setdefault(self.find(e), []).append(e)
        return sorted(groups.values(), key=lambda members: members[0])


def quotient_map(P: FiniteChargedStructure) -> list:
    """Class index of every point of ``P`` under the relation ``d(a, b) = 0``.

    Classes are numbered by their smallest member.
    """
    n = P.size
    dsu = DisjointSet(n)
    for a, b in itertools.combinations(range(n), 2):
        if P.metric[a, b] == 0:
            dsu.union(a, b)
    classes = dsu.classes()
    projection = [0] * n
    for index, members in enumerate(classes):
        for a in members:
            projection[a] = index
    return projection


def quotient_structure(sig: Signature, P: FiniteChargedStructure, projection: list or None = None) -> FiniteChargedStructure:
    """Identifies the points of a prestructure at distance 0.

    Each class is represented by its smallest member, whose label it keeps. Charges are summed over
    a class and symbols are read off on the representatives. Formula values are preserved: for
    every formula ``φ`` and tuple ``ā``, ``φ`` has the same value at ``ā`` in ``P`` and at its image
    in the quotient.

    Args:
        sig (Signature): the signature.
        P (FiniteChargedStructure): the prestructure; every constraint of
            :func:`validate_structure` except ``d(a, b) = 0 ⇒ a = b`` is assumed.
        projection (list, optional): a precomputed :func:`quotient_map` of ``P``.

    Returns:
        FiniteChargedStructure: the quotient, equal to ``P`` when ``P`` is already a metric space.

    Raises:
        IllDefinedQuotient: if a function or relation separates two merged points.
    """
    projection = quotient_map(P) if projection is None else projection
    k = max(projection) + 1
    if k == P.size:
        return P
    representatives = [projection.index(c) for c in range(k)]
    logger.debug("quotient merges %d points into %d classes", P.size, k)

    charge = [P.scalar(0)] * k
    for a in range(P.size):
        charge[projection[a]] = charge[projection[a]] + P.charge[a]

    reps = np.array(representatives)
    metric = P.metric[np.ix_(reps, reps)]

    functions = {}
    for name, table in P.functions.items():
        image = np.array(projection)[table]
        for args in itertools.product(range(P.size), repeat=table.ndim):
            rep_args = tuple(representatives[projection[a]] for a in args)
            if image[args] != image[rep_args]:
                raise IllDefinedQuotient(f"{name}{args} and {name}{rep_args} fall in different classes.")
        functions[name] = image[np.ix_(*[reps] * table.ndim)]

    relations = {}
    for name, table in P.relations.items():
        for args in itertools.product(range(P.size), repeat=table.ndim):
            rep_args = tuple(representatives[projection[a]] for a in args)
            if table[args] != table[rep_args]:
                raise IllDefinedQuotient(f"{name}{args} = {table[args]} but {name}{rep_args} = {table[rep_args]}.")
        relations[name] = table[np.ix_(*[reps] * table.ndim)]

    constants = {name: projection[a] for name, a in P.constants.items()}
    points = [P.points[r] for r in representatives]
    return FiniteChargedStructure(points, metric, charge, constants, functions, relations, exact=P.exact)
