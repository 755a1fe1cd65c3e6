import logging
from dataclasses import dataclass

from ..common.errors import MalformedBindings, NotSubstitutable, StepRejected, UnknownAxiom, UnknownSymbol
from ..parser.printer import pretty_condition
from ..syntax.formulas import Condition
from ..syntax.signature import EMPTY_SIGNATURE, Signature
from .axioms import instantiate, side_condition_failure
from .rules import QUANTIFIER_RULES, RejectReason, apply_rule, bound_variable
from .script import AxiomRef, Hyp, ProofScript, RuleRef

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StepStatus:
    id: object
    accepted: bool
    reason: RejectReason or None = None
    detail: str = ''

    def to_dict(self) -> dict:
        out = {'id': self.id, 'accepted': self.accepted}
        if not self.accepted:
            out.update(reason=str(self.reason), detail=self.detail)
        return out


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`check_proof`.

    Attributes:
        accepted (bool): every step checks.
        statuses (tuple): one :class:`StepStatus` per step, in script order.
        failure (StepStatus): the first rejected step, ``None`` when accepted.
    """
    accepted: bool
    statuses: tuple
    failure: StepStatus or None = None

    @property
    def reason(self):
        return None if self.failure is None else self.failure.reason

    def to_dict(self) -> dict:
        return {
            'accepted': self.accepted,
            'steps': [s.to_dict() for s in self.statuses],
            'failure': None if self.failure is None else self.failure.to_dict()
        }


def check_axiom_step(cond: Condition, ref: AxiomRef, sig: Signature = EMPTY_SIGNATURE):
    """Raises :class:`StepRejected` unless ``cond`` is an instance of the cited axiom."""
    try:
        instances = instantiate(ref.name, ref.bindings, sig)
    except NotSubstitutable as e:
        raise StepRejected(RejectReason.NOT_SUBSTITUTABLE, e.message)
    except UnknownAxiom as e:
        raise StepRejected(RejectReason.AXIOM_MISMATCH, e.message)
    except (MalformedBindings, UnknownSymbol) as e:
        raise StepRejected(RejectReason.MALFORMED_BINDINGS, e.message)
    failure = side_condition_failure(ref.name, ref.bindings)
    if failure is not None:
        raise StepRejected(RejectReason.SIDE_CONDITION, f"{ref.name}: {failure}.")
    target = cond.normal_form()
    if not any(c.normal_form() == target for c in instances):
        expected = ' or '.join(pretty_condition(c) for c in instances)
        raise StepRejected(RejectReason.AXIOM_MISMATCH, f"{ref.name} gives {expected}.")


class _Checker:

    def __init__(self, script: ProofScript):
        self.script = script
        self.hypotheses = {c.normal_form() for c in script.hypotheses}
        self.conditions = {}
        # normal forms of the hypotheses each accepted step depends on
        self.depends = {}
        self.rejected = set()

    def rule_step(self, step, ref: RuleRef) -> frozenset:
        for premise in ref.premises:
            if premise in self.rejected:
                raise StepRejected(RejectReason.PREMISE_REJECTED, f"premise {premise!r} was rejected.")
        premises = [self.conditions[p] for p in ref.premises]
        expected = apply_rule(ref.name, premises, step.condition)
        if expected.normal_form() != step.condition.normal_form():
            raise StepRejected(RejectReason.RULE_MISMATCH,
                               f"{ref.name} gives {pretty_condition(expected)} from these premises.")
        depends = frozenset().union(*(self.depends[p] for p in ref.premises))
        if ref.name in QUANTIFIER_RULES:
            x = bound_variable(step.condition)
            for hyp in sorted(depends, key=pretty_condition):
                if x in hyp.free_vars():
                    raise StepRejected(RejectReason.FREE_VARIABLE,
                                       f"{x} is free in the hypothesis {pretty_condition(hyp)}.")
        return depends

    def step(self, step) -> frozenset:
        just = step.justification
        if isinstance(just, Hyp):
            cond = step.condition.normal_form()
            if cond not in self.hypotheses:
                raise StepRejected(RejectReason.NOT_IN_HYPOTHESES,
                                   f"{pretty_condition(step.condition)} is not a hypothesis.")
            return frozenset([cond])
        if isinstance(just, AxiomRef):
            check_axiom_step(step.condition, just, self.script.sig)
            return frozenset()
        return self.rule_step(step, just)

    def run(self) -> Verdict:
        statuses = []
        for step in self.script.steps:
            try:
                self.depends[step.id] = self.step(step)
                self.conditions[step.id] = step.condition
                statuses.append(StepStatus(step.id, True))
                logger.debug("step %r accepted", step.id)
            except StepRejected as e:
                self.rejected.add(step.id)
                self.conditions[step.id] = step.condition
                statuses.append(StepStatus(step.id, False, RejectReason(e.reason), e.message))
                logger.debug("step %r rejected: %s %s", step.id, e.reason, e.message)
        failure = next((s for s in statuses if not s.accepted), None)
        return Verdict(failure is None, tuple(statuses), failure)


def check_proof(script: ProofScript) -> Verdict:
    """Checks every step of ``script``.

    A step holds when its condition is a hypothesis, an instance of the cited axiom (side condition
    included) or the conclusion of the cited rule applied to its premises. Conditions are compared
    modulo α-renaming and the collapse of ``0·φ`` to ``0``. For R4 and R5 the bound variable must not
    be free in any hypothesis the premise depends on; hypotheses the derivation never uses impose
    nothing, so adding hypotheses never turns an accepted script into a rejected one.

    Args:
        script (ProofScript): the script.

    Returns:
        Verdict: acceptance, per-step statuses and the first failure. Steps whose premise was rejected
        are rejected with ``PremiseRejected``.
    """
    verdict = _Checker(script).run()
    logger.info("proof %s (%d steps)", 'accepted' if verdict.accepted else 'rejected', len(script))
    return verdict
