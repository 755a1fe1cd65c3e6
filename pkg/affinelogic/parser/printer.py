from ..common.rationals import format_rational
from ..syntax.formulas import ATOMS, Add, Condition, Dist, Formula, Int, Inf, One, Quantifier, Rel, Scale, Sup
from ..syntax.signature import METRIC_SYMBOL
from ..syntax.terms import App, Const, Term, Var

_KEYWORD = {Inf: 'inf', Sup: 'sup', Int: 'int'}


def pretty_term(t: Term) -> str:
    if isinstance(t, (Var, Const)):
        return t.name
    return f"{t.function}({', '.join(pretty_term(a) for a in t.args)})"


def _open_right(phi: Formula) -> bool:
    # printed text ends inside a quantifier scope
    if isinstance(phi, Quantifier):
        return True
    if isinstance(phi, Scale):
        return not isinstance(phi.body, Add) and _open_right(phi.body)
    if isinstance(phi, Add):
        return not isinstance(phi.right, Add) and _open_right(phi.right)
    return False


def pretty(phi: Formula) -> str:
    """Text of a formula in the core grammar; :func:`parse_formula` reads it back to ``phi``.

    Only the parentheses needed to keep the tree are printed: the right operand of a sum that is
    itself a sum, the operand of a scaling that is a sum, and any operand whose text would leave a
    quantifier scope open.
    """
    if isinstance(phi, One):
        return '1'
    if isinstance(phi, Dist):
        return f"{METRIC_SYMBOL}({pretty_term(phi.left)}, {pretty_term(phi.right)})"
    if isinstance(phi, Rel):
        return f"{phi.relation}({', '.join(pretty_term(a) for a in phi.args)})"
    if isinstance(phi, Add):
        left = pretty(phi.left)
        if _open_right(phi.left):
            left = f"({left})"
        right = pretty(phi.right)
        if isinstance(phi.right, Add):
            right = f"({right})"
        return f"{left} + {right}"
    if isinstance(phi, Scale):
        body = pretty(phi.body)
        if isinstance(phi.body, Add):
            body = f"({body})"
        return f"{format_rational(phi.r)} * {body}"
    return f"{_KEYWORD[type(phi)]} {phi.var}. {pretty(phi.body)}"


def pretty_condition(cond: Condition) -> str:
    return f"{pretty(cond.lhs)} <= {pretty(cond.rhs)}"
