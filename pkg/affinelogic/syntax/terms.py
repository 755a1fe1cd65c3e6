from dataclasses import dataclass

from ..common.errors import UnknownSymbol
from .signature import Signature


class Term:
    """Base class of term nodes: :class:`Var`, :class:`Const` and :class:`App`."""
    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Const(Term):
    name: str


@dataclass(frozen=True)
class App(Term):
    function: str
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, 'args', tuple(self.args))


def term_vars(t: Term) -> frozenset:
    if isinstance(t, Var):
        return frozenset((t.name, ))
    if isinstance(t, Const):
        return frozenset()
    return frozenset().union(*(term_vars(a) for a in t.args))


def term_substitute(t: Term, x: str, s: Term) -> Term:
    """Replaces every occurrence of the variable ``x`` in ``t`` by ``s``."""
    if isinstance(t, Var):
        return s if t.name == x else t
    if isinstance(t, Const):
        return t
    return App(t.function, tuple(term_substitute(a, x, s) for a in t.args))


def term_rename(t: Term, renaming: dict) -> Term:
    if isinstance(t, Var):
        return Var(renaming.get(t.name, t.name))
    if isinstance(t, Const):
        return t
    return App(t.function, tuple(term_rename(a, renaming) for a in t.args))


def check_term(sig: Signature, t: Term):
    """Raises :class:`UnknownSymbol` or :class:`ArityMismatch` if ``t`` is not a term over ``sig``."""
    if isinstance(t, Const):
        if not sig.is_constant(t.name):
            raise UnknownSymbol(f"unknown constant {t.name!r}.")
    elif isinstance(t, App):
        sig.function(t.function, len(t.args))
        for a in t.args:
            check_term(sig, a)
