import logging
from dataclasses import dataclass

import numpy as np

from ..common.errors import InvalidStructure, SizeMismatch, ProductTooLarge
from ..common.python_utils import get_product_cap
from ..semantics.quotient import quotient_map, quotient_structure
from ..semantics.structure import FiniteChargedStructure
from ..semantics.validation import validate_structure
from ..syntax.signature import Signature
from .charge_space import UltrachargeSpace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ultramean:
    """An ultramean together with the data relating it to its factors.

    Attributes:
        structure (FiniteChargedStructure): the quotient of the product.
        prestructure (FiniteChargedStructure): the raw product with the averaged pseudometric.
        projection (tuple): class index of each raw product point.
        sizes (tuple): carrier sizes of the factors; raw points are numbered in row-major order.
    """
    structure: FiniteChargedStructure
    prestructure: FiniteChargedStructure
    projection: tuple
    sizes: tuple

    def raw_index(self, coordinates) -> int:
        return int(np.ravel_multi_index(tuple(coordinates), self.sizes))

    def class_of(self, coordinates) -> int:
        """Point of the ultramean represented by the tuple ``coordinates`` (one point per factor)."""
        return self.projection[self.raw_index(coordinates)]

    def coordinates(self) -> np.ndarray:
        """``(N, m)`` array: row ``j`` holds the factor points of raw point ``j``."""
        total = int(np.prod(self.sizes))
        return np.stack(np.unravel_index(np.arange(total), self.sizes), axis=1)


def _coordinate_arrays(coords, factor, arity):
    # coordinate of factor ``factor`` of argument j, laid out along axis j
    total = coords.shape[0]
    return tuple(coords[:, factor].reshape(tuple(total if i == j else 1 for i in range(arity)))
                 for j in range(arity))


def product_prestructure(ws: UltrachargeSpace, models) -> tuple:
    """The raw product of ``models``: averaged pseudometric, product charge and coordinatewise symbols.

    Returns:
        tuple: ``(prestructure, sizes)``.
    """
    sizes = tuple(M.size for M in models)
    total = int(np.prod(sizes))
    coords = np.stack(np.unravel_index(np.arange(total), sizes), axis=1)
    strides = [int(np.prod(sizes[i + 1:])) for i in range(len(sizes))]
    first = models[0]

    metric = np.full((total, total), first.scalar(0), dtype=first.dtype)
    charge = np.full(total, first.one, dtype=first.dtype)
    for i, (w, M) in enumerate(zip(ws.weights, models)):
        column = coords[:, i]
        metric = metric + M.scalar(w) * M.metric[column[:, None], column[None, :]]
        charge = charge * M.charge[column]

    constants = {name: int(np.ravel_multi_index(tuple(M.constants[name] for M in models), sizes))
                 for name in first.constants}

    functions = {}
    for name, table in first.functions.items():
        arity = table.ndim
        image = np.zeros((total, ) * arity, dtype=np.int64)
        for i, M in enumerate(models):
            image = image + strides[i] * M.functions[name][_coordinate_arrays(coords, i, arity)]
        functions[name] = image

    relations = {}
    for name, table in first.relations.items():
        arity = table.ndim
        values = np.full((1, ) * arity, first.scalar(0), dtype=first.dtype)
        for i, (w, M) in enumerate(zip(ws.weights, models)):
            values = values + M.scalar(w) * M.relations[name][_coordinate_arrays(coords, i, arity)]
        relations[name] = np.broadcast_to(values, (total, ) * arity)

    labels = [f"({','.join(M.points[a] for M, a in zip(models, row))})" for row in coords]
    prestructure = FiniteChargedStructure(labels, metric, charge, constants, functions, relations, exact=first.exact)
    return prestructure, sizes


def construct_ultramean(sig: Signature, ws: UltrachargeSpace, models, product_cap: int or None = None,
                        validate: bool = True) -> Ultramean:
    """Builds the ultramean of ``models`` with respect to ``ws``.

    The carrier is the product of the carriers with the pseudometric
    ``d(a, b) = Σ_i w_i d_i(a_i, b_i)``, quotiented by ``d = 0`` through :func:`quotient_structure`.
    Functions act coordinatewise, relations are averaged with the weights, and the charge is the
    product charge ``⊗ μ_i`` pushed forward along the quotient map. Coordinates of weight 0 stay in
    the raw product and disappear in the quotient.

    Args:
        sig (Signature): the signature of all ``models``.
        ws (UltrachargeSpace): the weights, one per model.
        models (list): validated :class:`FiniteChargedStructure` factors.
        product_cap (int, optional): largest raw product allowed. Defaults to ``AL_PRODUCT_CAP`` or
            ``10**6``.
        validate (bool, optional): run :func:`validate_structure` on the result. Defaults to ``True``.

    Returns:
        Ultramean: the structure with its projection data.

    Raises:
        SizeMismatch: if the number of models differs from the number of weights.
        ProductTooLarge: if the raw product exceeds the cap.
        InvalidStructure: if ``validate`` is set and the result fails :func:`validate_structure`, which
            happens when a factor is invalid.
    """
    models = list(models)
    if len(models) != ws.size:
        raise SizeMismatch(f"{ws.size} weights but {len(models)} models.")
    assert all(M.exact for M in models), "ultrameans are built from exact structures only."
    cap = get_product_cap(product_cap)
    total = int(np.prod([M.size for M in models], dtype=object))
    if total > cap:
        raise ProductTooLarge(f"raw product has {total} points, the cap is {cap}.")
    logger.debug("building ultramean of %d factors, raw product of %d points", len(models), total)

    prestructure, sizes = product_prestructure(ws, models)
    projection = quotient_map(prestructure)
    structure = quotient_structure(sig, prestructure, projection)
    if validate:
        mass_le_one = any(M.mass != 1 for M in models)
        violations = validate_structure(sig, structure, mass_le_one=mass_le_one)
        if violations:
            first = violations[0]
            raise InvalidStructure(f"the ultramean of the given factors is invalid: {len(violations)} violation(s), "
                                   f"first {first.kind} [{first.axiom}] {first.detail}.", violations)
    return Ultramean(structure, prestructure, tuple(projection), sizes)


def build_ultramean(sig: Signature, ws: UltrachargeSpace, models, product_cap: int or None = None,
                    validate: bool = True) -> FiniteChargedStructure:
    """The structure of :func:`construct_ultramean`."""
    return construct_ultramean(sig, ws, models, product_cap, validate).structure


def build_powermean(sig: Signature, ws: UltrachargeSpace, M: FiniteChargedStructure, product_cap: int or None = None,
                    validate: bool = True) -> FiniteChargedStructure:
    """The ultramean of ``ws.size`` copies of ``M``."""
    return build_ultramean(sig, ws, [M] * ws.size, product_cap, validate)
