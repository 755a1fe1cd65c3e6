from fractions import Fraction

import numpy as np

from ..common.errors import DimensionMismatch

# elementwise conversion of an object array to exact rationals
_to_fraction = np.frompyfunc(Fraction, 1, 1)


def _freeze(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def _rational_array(values, exact: bool, shape: tuple, what: str) -> np.ndarray:
    array = np.array(values, dtype=object)
    if array.shape != shape:
        raise DimensionMismatch(f"{what} has shape {array.shape}, expected {shape}.")
    if exact:
        array = np.asarray(_to_fraction(array), dtype=object).reshape(shape)
    else:
        array = array.astype(np.float64)
    return _freeze(array)


class FiniteChargedStructure:
    """A finite metric structure with a charge.

    The carrier is ``range(n)``; ``points`` only keeps a label per point. The metric, the charge and
    the relation tables hold :class:`fractions.Fraction` objects in ``numpy`` object arrays, or
    ``float64`` when ``exact`` is ``False`` (the grid fast path). Function tables are integer arrays
    of shape ``(n,) * arity`` holding point indices. All arrays are read-only and the structure is
    never modified after construction.

    Nothing beyond array dimensions is checked here; metric axioms, Lipschitz conditions, bounds and
    the charge are checked by :func:`validate_structure`.

    Args:
        points (list): labels of the ``n >= 1`` points.
        metric: ``n x n`` matrix.
        charge: ``n`` non-negative weights.
        constants (dict, optional): constant name to point index.
        functions (dict, optional): function name to a nested list / array of point indices.
        relations (dict, optional): relation name to a nested list / array of values in ``[0, 1]``.
        exact (bool, optional): rational arithmetic. Defaults to ``True``.

    Raises:
        DimensionMismatch: if an array does not have the shape its position requires.
    """

    def __init__(self, points, metric, charge, constants=None, functions=None, relations=None, exact: bool = True):
        self.points = tuple(str(p) for p in points)
        n = len(self.points)
        if n < 1:
            raise DimensionMismatch("a structure needs at least one point.")
        self.exact = exact
        self.dtype = object if exact else np.float64
        self.metric = _rational_array(metric, exact, (n, n), 'metric')
        self.charge = _rational_array(charge, exact, (n, ), 'charge')

        self.constants = {}
        for name, index in (constants or {}).items():
            if isinstance(index, bool) or not isinstance(index, (int, np.integer)) or not 0 <= index < n:
                raise DimensionMismatch(f"constant {name!r} must be a point index in [0, {n}), got {index!r}.")
            self.constants[name] = int(index)

        self.functions = {}
        for name, table in (functions or {}).items():
            array = np.array(table, dtype=object)
            if array.ndim < 1 or array.shape != (n, ) * array.ndim:
                raise DimensionMismatch(f"table of {name!r} has shape {array.shape}, expected (n,) * arity with n={n}.")
            for value in array.ravel():
                if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or not 0 <= value < n:
                    raise DimensionMismatch(f"table of {name!r} holds {value!r}, not a point index.")
            self.functions[name] = _freeze(array.astype(np.int64))

        self.relations = {}
        for name, table in (relations or {}).items():
            array = np.array(table, dtype=object)
            if array.ndim < 1 or array.shape != (n, ) * array.ndim:
                raise DimensionMismatch(f"table of {name!r} has shape {array.shape}, expected (n,) * arity with n={n}.")
            self.relations[name] = _rational_array(array, exact, array.shape, f"table of {name!r}")

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def mass(self):
        return self.charge.sum()

    @property
    def one(self):
        return Fraction(1) if self.exact else 1.0

    def scalar(self, r):
        """``r`` in the number type of this structure."""
        return Fraction(r) if self.exact else float(r)

    def replace(self, **changes) -> 'FiniteChargedStructure':
        """A copy with some constructor arguments replaced, e.g. ``S.replace(charge=[1, 0])``."""
        kwargs = dict(points=self.points, metric=self.metric, charge=self.charge, constants=self.constants,
                      functions=self.functions, relations=self.relations, exact=self.exact)
        kwargs.update(changes)
        return FiniteChargedStructure(**kwargs)

    def __eq__(self, other):
        if not isinstance(other, FiniteChargedStructure):
            return NotImplemented
        return (self.points == other.points and self.exact == other.exact
                and np.array_equal(self.metric, other.metric) and np.array_equal(self.charge, other.charge)
                and self.constants == other.constants
                and self.functions.keys() == other.functions.keys()
                and all(np.array_equal(t, other.functions[k]) for k, t in self.functions.items())
                and self.relations.keys() == other.relations.keys()
                and all(np.array_equal(t, other.relations[k]) for k, t in self.relations.items()))

    __hash__ = None

    def __repr__(self):
        return f"FiniteChargedStructure(n={self.size}, mass={self.mass}, exact={self.exact})"
