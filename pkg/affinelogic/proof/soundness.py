import logging
from dataclasses import dataclass

from tqdm import tqdm

from ..common.abc_checker import StructureChecker
from ..common.errors import KernelSoundnessError, RejectedScript
from ..parser.printer import pretty_condition
from ..semantics.evaluation import check_condition
from ..semantics.tables import ValueTables
from .kernel import check_proof
from .script import ProofScript

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModelOutcome:
    """What one model says about an accepted script.

    ``vacuous`` models violate a hypothesis; for the others ``margins`` holds the margin of every
    step condition, the last one being the conclusion.
    """
    index: int
    vacuous: bool
    margins: tuple = ()

    @property
    def conclusion_margin(self):
        return self.margins[-1] if self.margins else None


class SoundnessProbe(StructureChecker):
    """Evaluates the conditions of an accepted proof script in models of its hypotheses.

    A model in which every hypothesis holds under every environment must satisfy every derived
    condition with a non-negative margin. A negative margin is a counterexample to the kernel.

    Args:
        script (ProofScript): the script; it must be accepted by :func:`check_proof`.
        strict (bool, optional): raise :class:`KernelSoundnessError` on a counterexample. Defaults to ``True``.
        progress (bool, optional): show a progress bar over the models. Defaults to ``False``.

    Raises:
        RejectedScript: if the kernel rejects ``script``.
    """

    def __init__(self, script: ProofScript, strict: bool = True, progress: bool = False):
        super().__init__(script.sig, progress)
        verdict = check_proof(script)
        if not verdict.accepted:
            failure = verdict.failure
            raise RejectedScript(f"step {failure.id!r} is rejected: {failure.reason} {failure.detail}")
        self.script = script
        self.strict = strict

    def outcome(self, index: int, M) -> ModelOutcome:
        tables = ValueTables(M)
        for hyp in self.script.hypotheses:
            if not check_condition(M, hyp, tables)[0]:
                return ModelOutcome(index, True)
        margins = tuple(check_condition(M, step.condition, tables)[1] for step in self.script.steps)
        return ModelOutcome(index, False, margins)

    def check(self, models) -> dict:
        """
        Args:
            models (list): validated structures over the script's signature.

        Returns:
            dict: ``sound`` (bool), ``outcomes`` (list of :class:`ModelOutcome`), ``vacuous`` (indices of
            models violating a hypothesis) and ``counterexamples`` (``(model index, step id, margin)``).

        Raises:
            KernelSoundnessError: in strict mode, on the first counterexample.
        """
        outcomes, counterexamples = [], []
        for i, M in enumerate(tqdm(list(models), leave=True, position=0, disable=not self.progress)):
            outcome = self.outcome(i, M)
            outcomes.append(outcome)
            for step, margin in zip(self.script.steps, outcome.margins):
                if margin < 0:
                    counterexamples.append((i, step.id, margin))
                    logger.critical("accepted step %r fails in model %d with margin %s: %s", step.id, i, margin,
                                    pretty_condition(step.condition))
                    if self.strict:
                        raise KernelSoundnessError(f"accepted step {step.id!r} fails in model {i} with margin {margin}.")
        vacuous = [o.index for o in outcomes if o.vacuous]
        logger.info("soundness probe: %d models, %d vacuous, %d counterexamples", len(outcomes), len(vacuous),
                    len(counterexamples))
        return {'sound': not counterexamples, 'outcomes': outcomes, 'vacuous': vacuous,
                'counterexamples': counterexamples}


def soundness_probe(script: ProofScript, models, strict: bool = True) -> dict:
    """Runs :class:`SoundnessProbe` on ``models``; see :meth:`SoundnessProbe.check`."""
    return SoundnessProbe(script, strict).check(models)
