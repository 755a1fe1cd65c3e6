import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ..common.errors import ArityMismatch, SchemaError, UnknownSymbol

# the metric symbol rho, written ``d`` in the concrete syntax; binary and 1-Lipschitz
METRIC_SYMBOL = 'd'
KEYWORDS = frozenset({'inf', 'sup', 'int', METRIC_SYMBOL})

IDENTIFIER = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')


@dataclass(frozen=True)
class FunctionSymbol:
    name: str
    arity: int
    lipschitz: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'lipschitz', Fraction(self.lipschitz))


@dataclass(frozen=True)
class RelationSymbol:
    name: str
    arity: int
    lipschitz: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'lipschitz', Fraction(self.lipschitz))


@dataclass(frozen=True)
class Signature:
    """A Lipschitz signature.

    Constants, function symbols and relation symbols share one name space. The metric symbol is
    implicit: it is binary, has Lipschitz constant 1 and cannot be declared.

    Args:
        constants (tuple): constant names.
        functions (tuple): :class:`FunctionSymbol` entries, arity at least 1.
        relations (tuple): :class:`RelationSymbol` entries, arity at least 1.

    Raises:
        SchemaError: on duplicate or reserved names, bad arities or negative Lipschitz constants.
    """
    constants: tuple = ()
    functions: tuple = ()
    relations: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'constants', tuple(self.constants))
        object.__setattr__(self, 'functions', tuple(self.functions))
        object.__setattr__(self, 'relations', tuple(self.relations))

        names = list(self.constants) + [s.name for s in self.functions] + [s.name for s in self.relations]
        seen = set()
        for name in names:
            if not isinstance(name, str) or not IDENTIFIER.match(name):
                raise SchemaError(f"invalid symbol name {name!r}.")
            if name in KEYWORDS:
                raise SchemaError(f"{name!r} is reserved and cannot be declared.")
            if name in seen:
                raise SchemaError(f"symbol {name!r} declared twice.")
            seen.add(name)
        for s in self.functions + self.relations:
            if not isinstance(s.arity, int) or s.arity < 1:
                raise SchemaError(f"symbol {s.name!r} must have arity >= 1, got {s.arity!r}.")
            if s.lipschitz < 0:
                raise SchemaError(f"symbol {s.name!r} has a negative Lipschitz constant.")

    @classmethod
    def build(cls, constants=(), functions=None, relations=None):
        """Shorthand constructor: ``functions`` and ``relations`` map a name to ``(arity, lipschitz)``."""
        functions = functions or {}
        relations = relations or {}
        return cls(
            constants=tuple(constants),
            functions=tuple(FunctionSymbol(n, a, l) for n, (a, l) in functions.items()),
            relations=tuple(RelationSymbol(n, a, l) for n, (a, l) in relations.items()))

    @cached_property
    def _functions(self):
        return {s.name: s for s in self.functions}

    @cached_property
    def _relations(self):
        return {s.name: s for s in self.relations}

    def is_constant(self, name: str) -> bool:
        return name in self.constants

    def is_function(self, name: str) -> bool:
        return name in self._functions

    def is_relation(self, name: str) -> bool:
        return name in self._relations

    def function(self, name: str, arity: int or None = None, span=None) -> FunctionSymbol:
        if name not in self._functions:
            raise UnknownSymbol(f"unknown function symbol {name!r}.", span)
        symbol = self._functions[name]
        if arity is not None and arity != symbol.arity:
            raise ArityMismatch(f"{name} takes {symbol.arity} argument(s), got {arity}.", span)
        return symbol

    def relation(self, name: str, arity: int or None = None, span=None) -> RelationSymbol:
        if name not in self._relations:
            raise UnknownSymbol(f"unknown relation symbol {name!r}.", span)
        symbol = self._relations[name]
        if arity is not None and arity != symbol.arity:
            raise ArityMismatch(f"{name} takes {symbol.arity} argument(s), got {arity}.", span)
        return symbol


EMPTY_SIGNATURE = Signature()
