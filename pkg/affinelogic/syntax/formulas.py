"""Formula ASTs of affine integration logic and the purely syntactic operations on them."""
import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..common.errors import NotSubstitutable
from .signature import Signature
from .terms import Term, Var, check_term, term_rename, term_substitute, term_vars


class Formula:
    """Base class of formula nodes.

    Atomic formulas are :class:`One`, :class:`Rel` and :class:`Dist`; connectives are :class:`Add`
    and :class:`Scale`; quantifiers are :class:`Inf`, :class:`Sup` and :class:`Int`. All nodes are
    immutable and hashable, equality is structural.
    """
    __slots__ = ()


@dataclass(frozen=True)
class One(Formula):
    pass


@dataclass(frozen=True)
class Rel(Formula):
    relation: str
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, 'args', tuple(self.args))


@dataclass(frozen=True)
class Dist(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Add(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Scale(Formula):
    r: Fraction
    body: Formula

    def __post_init__(self):
        object.__setattr__(self, 'r', Fraction(self.r))


@dataclass(frozen=True)
class Quantifier(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Inf(Quantifier):
    pass


@dataclass(frozen=True)
class Sup(Quantifier):
    pass


@dataclass(frozen=True)
class Int(Quantifier):
    pass


ATOMS = (One, Rel, Dist)
QUANTIFIERS = (Inf, Sup, Int)

ONE = One()
# the formula written 0 in the axioms
ZERO = Scale(0, ONE)


def numeral(r) -> Formula:
    """The constant formula ``r``: ``1`` is :data:`ONE`, every other value is ``Scale(r, One)``."""
    r = Fraction(r)
    return ONE if r == 1 else Scale(r, ONE)


def numeral_value(phi: Formula):
    """Inverse of :func:`numeral`; ``None`` when ``phi`` is not a numeral."""
    if phi == ONE:
        return Fraction(1)
    if isinstance(phi, Scale) and phi.body == ONE:
        return phi.r
    return None


@dataclass(frozen=True)
class Condition:
    """The condition ``lhs <= rhs``. An equality is the pair returned by :meth:`equality`."""
    lhs: Formula
    rhs: Formula

    @staticmethod
    def equality(lhs: Formula, rhs: Formula) -> list:
        return [Condition(lhs, rhs), Condition(rhs, lhs)]

    def free_vars(self) -> frozenset:
        return free_vars(self.lhs) | free_vars(self.rhs)

    def is_sentence(self) -> bool:
        return not self.free_vars()

    def normal_form(self):
        return Condition(normal_form(self.lhs), normal_form(self.rhs))


def free_vars(phi: Formula) -> frozenset:
    if isinstance(phi, One):
        return frozenset()
    if isinstance(phi, Rel):
        return frozenset().union(*(term_vars(a) for a in phi.args))
    if isinstance(phi, Dist):
        return term_vars(phi.left) | term_vars(phi.right)
    if isinstance(phi, Add):
        return free_vars(phi.left) | free_vars(phi.right)
    if isinstance(phi, Scale):
        return free_vars(phi.body)
    return free_vars(phi.body) - {phi.var}


def substitute(phi: Formula, x: str, t: Term) -> Formula:
    """Capture-free substitution ``phi[t/x]`` of the term ``t`` for the free occurrences of ``x``.

    Raises:
        NotSubstitutable: if a quantifier of ``phi`` would capture a variable of ``t``.
    """
    t_vars = term_vars(t)

    def sub(f):
        if isinstance(f, One):
            return f
        if isinstance(f, Rel):
            return Rel(f.relation, tuple(term_substitute(a, x, t) for a in f.args))
        if isinstance(f, Dist):
            return Dist(term_substitute(f.left, x, t), term_substitute(f.right, x, t))
        if isinstance(f, Add):
            return Add(sub(f.left), sub(f.right))
        if isinstance(f, Scale):
            return Scale(f.r, sub(f.body))
        if f.var == x or x not in free_vars(f.body):
            return f
        if f.var in t_vars:
            raise NotSubstitutable(f"{f.var!r} would be captured substituting for {x!r}.")
        return type(f)(f.var, sub(f.body))

    return sub(phi)


def is_substitutable(phi: Formula, x: str, t: Term) -> bool:
    try:
        substitute(phi, x, t)
    except NotSubstitutable:
        return False
    return True


def alpha_normalize(phi: Formula) -> Formula:
    """Renames bound variables canonically.

    The variable bound at nesting level ``k`` becomes the ``k``-th name of ``v0, v1, ...`` that is
    not free in ``phi``. α-equivalent formulas get identical results and the map is idempotent.
    """
    reserved = free_vars(phi)
    candidates = (f'v{i}' for i in itertools.count() if f'v{i}' not in reserved)
    names = []

    def level_name(level):
        while len(names) <= level:
            names.append(next(candidates))
        return names[level]

    def norm(f, renaming, level):
        if isinstance(f, One):
            return f
        if isinstance(f, Rel):
            return Rel(f.relation, tuple(term_rename(a, renaming) for a in f.args))
        if isinstance(f, Dist):
            return Dist(term_rename(f.left, renaming), term_rename(f.right, renaming))
        if isinstance(f, Add):
            return Add(norm(f.left, renaming, level), norm(f.right, renaming, level))
        if isinstance(f, Scale):
            return Scale(f.r, norm(f.body, renaming, level))
        name = level_name(level)
        return type(f)(name, norm(f.body, {**renaming, f.var: name}, level + 1))

    return norm(phi, {}, 0)


def collapse_zero(phi: Formula) -> Formula:
    """Replaces every ``Scale(0, psi)`` by :data:`ZERO`."""
    if isinstance(phi, ATOMS):
        return phi
    if isinstance(phi, Add):
        return Add(collapse_zero(phi.left), collapse_zero(phi.right))
    if isinstance(phi, Scale):
        return ZERO if phi.r == 0 else Scale(phi.r, collapse_zero(phi.body))
    return type(phi)(phi.var, collapse_zero(phi.body))


def normal_form(phi: Formula) -> Formula:
    """The form the proof kernel compares: zero scalings collapsed, then α-normalized."""
    return alpha_normalize(collapse_zero(phi))


def depth(phi: Formula) -> int:
    """AST depth; atomic formulas have depth 1."""
    if isinstance(phi, ATOMS):
        return 1
    if isinstance(phi, Add):
        return 1 + max(depth(phi.left), depth(phi.right))
    return 1 + depth(phi.body)


def check_formula(sig: Signature, phi: Formula):
    """Raises :class:`UnknownSymbol` or :class:`ArityMismatch` if ``phi`` is not over ``sig``."""
    if isinstance(phi, Rel):
        sig.relation(phi.relation, len(phi.args))
        for a in phi.args:
            check_term(sig, a)
    elif isinstance(phi, Dist):
        check_term(sig, phi.left)
        check_term(sig, phi.right)
    elif isinstance(phi, Add):
        check_formula(sig, phi.left)
        check_formula(sig, phi.right)
    elif not isinstance(phi, One):
        check_formula(sig, phi.body)


def sum_of(formulas) -> Formula:
    """Left-associated sum of a non-empty sequence of formulas."""
    formulas = list(formulas)
    assert formulas, "sum_of needs at least one formula."
    total = formulas[0]
    for f in formulas[1:]:
        total = Add(total, f)
    return total


def tuple_distance(xs, ys) -> Formula:
    """``d(x1,y1) + ... + d(xn,yn)``, the sum metric on tuples of variables."""
    assert len(xs) == len(ys) and xs, "tuples must be non-empty and of equal length."
    return sum_of(Dist(Var(x), Var(y)) for x, y in zip(xs, ys))
