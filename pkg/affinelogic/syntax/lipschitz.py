from fractions import Fraction

from ..common.errors import UnknownSymbol
from .formulas import Add, Dist, Formula, One, Rel, Scale
from .signature import Signature
from .terms import App, Const, Term, Var


def term_lipschitz(sig: Signature, t: Term) -> Fraction:
    """Lipschitz constant of a term.

    Variables have constant 1, constants 0, and ``F(t1, ..., tn)`` has ``λ_F · Σ λ_ti``.

    Raises:
        UnknownSymbol: for undeclared symbols.
        ArityMismatch: for applications with the wrong number of arguments.
    """
    if isinstance(t, Var):
        return Fraction(1)
    if isinstance(t, Const):
        if not sig.is_constant(t.name):
            raise UnknownSymbol(f"unknown constant {t.name!r}.")
        return Fraction(0)
    assert isinstance(t, App), f"not a term: {t!r}"
    symbol = sig.function(t.function, len(t.args))
    return symbol.lipschitz * sum((term_lipschitz(sig, a) for a in t.args), Fraction(0))


def formula_lipschitz_bound(sig: Signature, phi: Formula) -> tuple:
    """Lipschitz constant and bound ``(λ_φ, b_φ)`` of a formula.

    ``One`` has ``(0, 1)``; an atomic ``R(t1, ..., tn)`` has ``(λ_R · Σ λ_ti, 1)`` and the metric
    symbol has ``λ = 1``; sums add both entries, ``r·φ`` multiplies both by ``|r|`` and the
    quantifiers ``inf``, ``sup`` and ``∫`` keep them.

    Args:
        sig (Signature): the signature ``phi`` is written in.
        phi (Formula): the formula.

    Returns:
        tuple: ``(lipschitz, bound)``, both non-negative :class:`fractions.Fraction`.

    Raises:
        UnknownSymbol: for undeclared symbols.
        ArityMismatch: for applications with the wrong number of arguments.
    """
    if isinstance(phi, One):
        return Fraction(0), Fraction(1)
    if isinstance(phi, Rel):
        symbol = sig.relation(phi.relation, len(phi.args))
        return symbol.lipschitz * sum((term_lipschitz(sig, a) for a in phi.args), Fraction(0)), Fraction(1)
    if isinstance(phi, Dist):
        return term_lipschitz(sig, phi.left) + term_lipschitz(sig, phi.right), Fraction(1)
    if isinstance(phi, Add):
        l1, b1 = formula_lipschitz_bound(sig, phi.left)
        l2, b2 = formula_lipschitz_bound(sig, phi.right)
        return l1 + l2, b1 + b2
    if isinstance(phi, Scale):
        lip, bound = formula_lipschitz_bound(sig, phi.body)
        return abs(phi.r) * lip, abs(phi.r) * bound
    return formula_lipschitz_bound(sig, phi.body)
