import numpy as np

from ..common.errors import UnboundVariable
from ..syntax.formulas import Add, Dist, Formula, Int, Inf, One, Rel, Scale, Sup
from ..syntax.terms import App, Const, Term, Var
from .structure import FiniteChargedStructure


class ValueTables:
    """Value tables of formulas over one structure.

    The table of ``φ`` over the variables ``(x1, ..., xk)`` is the ``(n,) * k`` array whose entry
    ``[a1, ..., ak]`` is the value of ``φ`` under ``xi -> ai``. Tables are computed bottom-up with
    ``numpy`` broadcasting: a quantifier appends an axis for its variable to the body's table and
    reduces it (``min``, ``max`` or the charge-weighted sum). Intermediate tables are cached, so
    evaluating many formulas that share subformulas over the same structure is cheap.

    Args:
        S (FiniteChargedStructure): the structure.
    """

    def __init__(self, S: FiniteChargedStructure):
        self.S = S
        self._cache = {}

    def _axis(self, name: str, axes: tuple) -> int:
        for i in range(len(axes) - 1, -1, -1):
            if axes[i] == name:
                return i
        raise UnboundVariable(f"variable {name!r} is not bound by the environment.")

    def _shape(self, axis: int, k: int) -> tuple:
        return tuple(self.S.size if i == axis else 1 for i in range(k))

    def term(self, t: Term, axes: tuple) -> np.ndarray:
        """Point-index table of a term, broadcastable to ``(n,) * len(axes)``."""
        k = len(axes)
        if isinstance(t, Var):
            axis = self._axis(t.name, axes)
            return np.arange(self.S.size).reshape(self._shape(axis, k))
        if isinstance(t, Const):
            if t.name not in self.S.constants:
                raise KeyError(f"constant {t.name!r} is not interpreted.")
            return np.full((1, ) * k, self.S.constants[t.name], dtype=np.int64)
        assert isinstance(t, App), f"not a term: {t!r}"
        args = tuple(self.term(a, axes) for a in t.args)
        return np.asarray(self.S.functions[t.function][args])

    def _table(self, phi: Formula, axes: tuple) -> np.ndarray:
        key = (phi, axes)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        S, k = self.S, len(axes)
        if isinstance(phi, One):
            out = np.full((1, ) * k, S.one, dtype=S.dtype)
        elif isinstance(phi, Dist):
            out = S.metric[self.term(phi.left, axes), self.term(phi.right, axes)]
        elif isinstance(phi, Rel):
            out = S.relations[phi.relation][tuple(self.term(a, axes) for a in phi.args)]
        elif isinstance(phi, Add):
            out = self._table(phi.left, axes) + self._table(phi.right, axes)
        elif isinstance(phi, Scale):
            out = S.scalar(phi.r) * self._table(phi.body, axes)
        else:
            body = self._table(phi.body, axes + (phi.var, ))
            body = np.broadcast_to(body, body.shape[:-1] + (S.size, ))
            if isinstance(phi, Inf):
                out = body.min(axis=-1)
            elif isinstance(phi, Sup):
                out = body.max(axis=-1)
            else:
                assert isinstance(phi, Int), f"not a formula: {phi!r}"
                out = (body * S.charge.reshape((1, ) * k + (S.size, ))).sum(axis=-1)
        out = np.asarray(out, dtype=S.dtype)
        self._cache[key] = out
        return out

    def table(self, phi: Formula, variables) -> np.ndarray:
        """The full ``(n,) * len(variables)`` table of ``phi``.

        Raises:
            UnboundVariable: if a free variable of ``phi`` is not in ``variables``.
        """
        variables = tuple(variables)
        out = self._table(phi, variables)
        return np.broadcast_to(out, (self.S.size, ) * len(variables))

    def clear(self):
        self._cache.clear()


def value_table(S: FiniteChargedStructure, phi: Formula, variables) -> np.ndarray:
    return ValueTables(S).table(phi, variables)
