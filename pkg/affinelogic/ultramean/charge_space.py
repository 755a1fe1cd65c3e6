from dataclasses import dataclass
from fractions import Fraction

from ..common.errors import SchemaError


@dataclass(frozen=True)
class UltrachargeSpace:
    """A finite index set ``I = {0, ..., m-1}`` with rational weights.

    At finite scale an ultracharge on ``I`` is a probability vector and ``∫_I f d℘ = Σ_i w_i f(i)``.

    Raises:
        SchemaError: if a weight is negative, the weights do not sum to 1 or there are none.
    """
    weights: tuple

    def __post_init__(self):
        weights = tuple(Fraction(w) for w in self.weights)
        object.__setattr__(self, 'weights', weights)
        if not weights:
            raise SchemaError("an ultracharge space needs at least one index.")
        if any(w < 0 for w in weights):
            raise SchemaError(f"weights must be non-negative, got {[str(w) for w in weights]}.")
        if sum(weights) != 1:
            raise SchemaError(f"weights must sum to 1, got {sum(weights)}.")

    @classmethod
    def uniform(cls, m: int) -> 'UltrachargeSpace':
        return cls(tuple(Fraction(1, m) for _ in range(m)))

    @property
    def size(self) -> int:
        return len(self.weights)

    def integrate(self, values):
        """``Σ_i w_i · values[i]``."""
        assert len(values) == self.size, "one value per index is required."
        return sum((w * v for w, v in zip(self.weights, values)), Fraction(0))
