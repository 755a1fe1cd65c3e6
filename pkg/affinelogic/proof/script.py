from dataclasses import dataclass, field

from ..common.errors import DanglingPremiseId, SchemaError
from ..syntax.formulas import Condition
from ..syntax.signature import EMPTY_SIGNATURE, Signature

RULE_NAMES = ('R1', 'R2', 'R3', 'R4', 'R5')


@dataclass(frozen=True)
class Hyp:
    """The step's condition is a member of the hypotheses."""


@dataclass(frozen=True)
class AxiomRef:
    """The step's condition is an instance of the axiom schema ``name``.

    ``bindings`` maps each metavariable of the schema to its value: a :class:`Formula`, a
    :class:`Term`, a list of terms, a :class:`fractions.Fraction` or a symbol / variable name.
    """
    name: str
    bindings: dict = field(default_factory=dict, hash=False)


@dataclass(frozen=True)
class RuleRef:
    """The step's condition follows by the rule ``name`` from the steps ``premises``."""
    name: str
    premises: tuple

    def __post_init__(self):
        object.__setattr__(self, 'premises', tuple(self.premises))


@dataclass(frozen=True)
class Step:
    id: object
    condition: Condition
    justification: object


@dataclass(frozen=True)
class ProofScript:
    """A hypothesis set and an ordered derivation.

    Each step is justified by a hypothesis, an axiom instance or a rule applied to earlier steps.
    The script proves the condition of its last step.

    Args:
        hypotheses (tuple): the conditions of Γ.
        steps (tuple): the :class:`Step` list.
        sig (Signature, optional): the signature the script is written in.
        description (str, optional): free text.

    Raises:
        SchemaError: on duplicate step ids, unknown rule names or an empty derivation.
        DanglingPremiseId: if a rule refers to an unknown or later step.
    """
    hypotheses: tuple
    steps: tuple
    sig: Signature = EMPTY_SIGNATURE
    description: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'hypotheses', tuple(self.hypotheses))
        object.__setattr__(self, 'steps', tuple(self.steps))
        if not self.steps:
            raise SchemaError("a proof script needs at least one step.")
        seen = set()
        for step in self.steps:
            if step.id in seen:
                raise SchemaError(f"step id {step.id!r} is used twice.")
            just = step.justification
            if isinstance(just, RuleRef):
                if just.name not in RULE_NAMES:
                    raise SchemaError(f"unknown rule {just.name!r}, expected one of {', '.join(RULE_NAMES)}.")
                for premise in just.premises:
                    if premise not in seen:
                        raise DanglingPremiseId(f"step {step.id!r} refers to {premise!r}, which is not an earlier step.")
            elif not isinstance(just, (Hyp, AxiomRef)):
                raise SchemaError(f"step {step.id!r} has no valid justification.")
            seen.add(step.id)

    @property
    def conclusion(self) -> Condition:
        return self.steps[-1].condition

    def step(self, step_id) -> Step:
        for s in self.steps:
            if s.id == step_id:
                return s
        raise KeyError(step_id)

    def with_hypotheses(self, extra) -> 'ProofScript':
        """The same derivation under ``Γ ∪ extra``."""
        return ProofScript(self.hypotheses + tuple(extra), self.steps, self.sig, self.description)

    def __len__(self):
        return len(self.steps)
