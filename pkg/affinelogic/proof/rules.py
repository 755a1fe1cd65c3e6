from enum import Enum

from ..common.errors import StepRejected
from ..syntax.formulas import ZERO, Add, Condition, Int, Quantifier, Scale, Sup, normal_form, numeral


class RejectReason(str, Enum):
    AXIOM_MISMATCH = 'AxiomMismatch'
    SIDE_CONDITION = 'SideCondition'
    NOT_SUBSTITUTABLE = 'NotSubstitutable'
    MALFORMED_BINDINGS = 'MalformedBindings'
    NOT_IN_HYPOTHESES = 'NotInHypotheses'
    RULE_MISMATCH = 'RuleMismatch'
    NEGATIVE_SCALAR = 'NegativeScalar'
    FREE_VARIABLE = 'FreeVariableSideCondition'
    PREMISE_REJECTED = 'PremiseRejected'
    WRONG_PREMISE_COUNT = 'WrongPremiseCount'

    def __str__(self):
        return self.value


def _premise_count(name, premises, *allowed):
    if len(premises) not in allowed:
        expected = ' or '.join(str(k) for k in allowed)
        raise StepRejected(RejectReason.WRONG_PREMISE_COUNT,
                           f"{name} takes {expected} premise(s), got {len(premises)}.")


def _same(a: Condition, b: Condition) -> bool:
    return a.normal_form() == b.normal_form()


def transitivity(premises, conclusion: Condition) -> Condition:
    """R1: from ``φ <= ψ`` and ``ψ <= θ`` infer ``φ <= θ``."""
    _premise_count('R1', premises, 2)
    first, second = premises
    if normal_form(first.rhs) != normal_form(second.lhs):
        raise StepRejected(RejectReason.RULE_MISMATCH, "the right side of the first premise is not the left side "
                           "of the second.")
    return Condition(first.lhs, second.rhs)


def add_both_sides(premises, conclusion: Condition) -> Condition:
    """R2: from ``φ <= ψ`` infer ``φ + θ <= ψ + θ``; ``θ`` is read off the conclusion."""
    _premise_count('R2', premises, 1)
    if not isinstance(conclusion.lhs, Add):
        raise StepRejected(RejectReason.RULE_MISMATCH, "R2 concludes a condition between two sums.")
    theta = conclusion.lhs.right
    (premise, ) = premises
    return Condition(Add(premise.lhs, theta), Add(premise.rhs, theta))


def scale_both_sides(premises, conclusion: Condition) -> Condition:
    """R3: from ``0 <= r`` and ``φ <= ψ`` infer ``r·φ <= r·ψ``.

    ``r`` is the rational read off the conclusion and must be non-negative. The premise ``0 <= r``
    may be omitted since ``r >= 0`` is checked arithmetically; when given it must be that condition.
    """
    _premise_count('R3', premises, 1, 2)
    if not isinstance(conclusion.lhs, Scale):
        raise StepRejected(RejectReason.RULE_MISMATCH, "R3 concludes a condition between two scalings.")
    r = conclusion.lhs.r
    if r < 0:
        raise StepRejected(RejectReason.NEGATIVE_SCALAR, f"R3 scales by {r}, which is negative.")
    if len(premises) == 2 and not _same(premises[0], Condition(ZERO, numeral(r))):
        raise StepRejected(RejectReason.RULE_MISMATCH, f"the first premise of R3 must be 0 <= {r}.")
    premise = premises[-1]
    return Condition(Scale(r, premise.lhs), Scale(r, premise.rhs))


def _monotone(name, quantifier, premises, conclusion):
    _premise_count(name, premises, 1)
    if not isinstance(conclusion.lhs, quantifier):
        raise StepRejected(RejectReason.RULE_MISMATCH, f"{name} concludes a condition between two "
                           f"{quantifier.__name__.lower()} formulas.")
    (premise, ) = premises
    x = conclusion.lhs.var
    return Condition(quantifier(x, premise.lhs), quantifier(x, premise.rhs))


def sup_monotone(premises, conclusion: Condition) -> Condition:
    """R4: from ``φ <= ψ`` infer ``sup_x φ <= sup_x ψ``."""
    return _monotone('R4', Sup, premises, conclusion)


def int_monotone(premises, conclusion: Condition) -> Condition:
    """R5: from ``φ <= ψ`` infer ``int_x φ <= int_x ψ``."""
    return _monotone('R5', Int, premises, conclusion)


RULES = {
    'R1': transitivity,
    'R2': add_both_sides,
    'R3': scale_both_sides,
    'R4': sup_monotone,
    'R5': int_monotone,
}

# rules whose bound variable must not be free in the hypotheses the premise depends on
QUANTIFIER_RULES = ('R4', 'R5')


def bound_variable(conclusion: Condition):
    return conclusion.lhs.var if isinstance(conclusion.lhs, Quantifier) else None


def apply_rule(name: str, premises, conclusion: Condition) -> Condition:
    """The conclusion rule ``name`` draws from ``premises``, with its parameters read off ``conclusion``.

    Raises:
        StepRejected: if the rule does not apply to the premises.
    """
    return RULES[name](list(premises), conclusion)
