# Files within this path, contain the proof kernel: proof scripts, the axiom schemas and rules, the
# checker producing verdicts, the model-based soundness probe and a generator of accepted scripts.

from .script import Hyp, AxiomRef, RuleRef, Step, ProofScript, RULE_NAMES
from .axioms import AxiomSchema, AXIOMS, get_axiom, check_bindings, instantiate, side_condition_failure, match_axiom
from .rules import RejectReason, RULES, apply_rule
from .kernel import StepStatus, Verdict, check_axiom_step, check_proof
from .soundness import ModelOutcome, SoundnessProbe, soundness_probe
from .generator import ScriptGenerator, random_script
from .fixtures import FIXTURES_DIR, MUTANTS_DIR, fixture_path

__all__ = [
    'Hyp', 'AxiomRef', 'RuleRef', 'Step', 'ProofScript', 'RULE_NAMES', 'AxiomSchema', 'AXIOMS', 'get_axiom',
    'check_bindings', 'instantiate', 'side_condition_failure', 'match_axiom', 'RejectReason', 'RULES', 'apply_rule',
    'StepStatus', 'Verdict', 'check_axiom_step', 'check_proof', 'ModelOutcome', 'SoundnessProbe', 'soundness_probe',
    'ScriptGenerator', 'random_script', 'FIXTURES_DIR', 'MUTANTS_DIR', 'fixture_path'
]
