import argparse
import logging
import sys
from dataclasses import dataclass, fields
from fractions import Fraction

import numpy as np

from .analysis import FubiniChecker, bounded_elementary_check, check_fubini, realized_type, solve_mixture, \
    type_distance
from .common.errors import AffineLogicError, ConfigError, Infeasible, InvalidStructure, KernelSoundnessError
from .common.file_utils import STRUCTURE_EXT, list_files, write_text
from .common.python_utils import get_product_cap
from .common.rationals import format_rational, parse_rational
from .parser import dump_json, dump_structure, dump_weights, load_formulas, load_proof, load_signature, \
    load_structure, load_theory, load_weights, parse_formula, pretty, pretty_condition
from .proof import check_proof, soundness_probe
from .semantics import evaluate, grid_point, random_structure, unit_interval_grid, validate_structure, check_condition
from .syntax import EMPTY_SIGNATURE, enumerate_formulas, random_formula
from .ultramean import LosChecker, build_powermean, build_ultramean, construct_ultramean, \
    sample_choices

logger = logging.getLogger(__name__)

FORMAT = '%(asctime)-15s %(message)s'

# exit codes
OK, FAILURE, INPUT_ERROR = 0, 1, 2

COMMANDS = ('validate', 'eval', 'check', 'ultramean', 'powermean', 'verify-los', 'check-proof', 'solve-mixture',
            'check-fubini', 'type-of', 'elem-check')


@dataclass(frozen=True)
class RunConfig:
    """Parsed command line of one run."""
    command: str
    inputs: tuple = ()
    structure: str = None
    codomain: str = None
    signature: str = None
    formula: str = None
    formulas: str = None
    theory: str = None
    weights: str = None
    models: str = None
    out: str = None
    at: str = None
    other: str = None
    map: str = None
    powermean: str = None
    grid: int = None
    float: bool = False
    tolerance: str = None
    depth: int = None
    arity: int = 1
    seed: int = None
    samples: int = None
    random: int = None
    method: str = 'auto'
    x: str = 'x'
    y: str = 'y'
    product_cap: int = None
    mass_le_one: bool = False
    trace: bool = False
    json: bool = False
    log_level: str = 'WARNING'

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'RunConfig':
        values = {f.name: getattr(args, f.name) for f in fields(cls) if getattr(args, f.name, None) is not None}
        values['inputs'] = tuple(values.get('inputs', ()))
        return cls(**values)

    @property
    def randomized(self) -> bool:
        return self.samples is not None or self.random is not None

    def check(self):
        """
        Raises:
            ConfigError: if the flags are inconsistent.
        """
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}.")
        if self.randomized and self.seed is None:
            raise ConfigError("randomized runs require --seed.")
        if self.tolerance is not None and not self.float:
            raise ConfigError("--tolerance is only meaningful with --float.")
        if self.float and self.grid is None:
            raise ConfigError("--float requires --grid.")
        if self.grid is not None and self.structure is not None:
            raise ConfigError("--grid and --structure are exclusive.")
        if self.grid is not None and self.grid < 2:
            raise ConfigError("--grid needs at least 2 points.")
        if self.depth is not None and self.depth < 1:
            raise ConfigError("--depth must be at least 1.")
        if self.product_cap is not None:
            get_product_cap(self.product_cap)
        if self.command == 'type-of' and self.other is not None and self.depth is None:
            raise ConfigError("type distances require an explicit --depth.")
        if self.command == 'elem-check' and self.depth is None:
            raise ConfigError("elem-check requires an explicit --depth.")
        if self.command == 'elem-check' and self.codomain is not None and self.powermean is not None:
            raise ConfigError("--codomain and --powermean are exclusive.")


def _text(value) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def _rng(config: RunConfig) -> np.random.RandomState:
    return np.random.RandomState(config.seed)


class Runner:
    """Dispatches a :class:`RunConfig` to the library.

    Every handler returns ``(exit code, report)``; the report is a JSON-ready ``dict`` and ``lines``
    collects the human-readable output.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.lines = []
        self._sig = None

    # inputs

    @property
    def sig(self):
        if self._sig is None:
            self._sig = load_signature(self.config.signature) if self.config.signature else EMPTY_SIGNATURE
        return self._sig

    def structure(self, path: str or None = None):
        if path is None and self.config.grid is not None:
            return unit_interval_grid(self.config.grid, exact=not self.config.float)
        path = path or self.config.structure
        if path is None:
            raise ConfigError("a structure is required (--structure or --grid).")
        return self.load(path)

    def load(self, path: str):
        """Reads a structure and validates it.

        Raises:
            InvalidStructure: if the structure fails :func:`validate_structure`.
        """
        S = load_structure(path, self.sig)
        violations = validate_structure(self.sig, S, self.config.mass_le_one)
        if violations:
            raise InvalidStructure(f"{path} is not a valid structure: {len(violations)} violation(s).", violations)
        return S

    def point(self, S, value: str) -> int:
        if self.config.grid is not None:
            return grid_point(S, parse_rational(value))
        if value in S.points:
            return S.points.index(value)
        try:
            index = int(value)
        except ValueError:
            raise ConfigError(f"point {value!r} is neither a label nor an index.")
        if not 0 <= index < S.size:
            raise ConfigError(f"point {value!r} is not in the structure.")
        return index

    def assignment(self, S, text: str or None) -> dict:
        """``"x=0,y=1"`` as an environment."""
        env = {}
        for item in filter(None, (text or '').split(',')):
            if '=' not in item:
                raise ConfigError(f"expected var=point in --at, got {item!r}.")
            var, value = item.split('=', 1)
            env[var.strip()] = self.point(S, value.strip())
        return env

    def formula_family(self, variables) -> list:
        if self.config.formulas:
            return load_formulas(self.config.formulas, self.sig)
        return enumerate_formulas(self.sig, variables, self.config.depth or 2)

    def models(self) -> list:
        return [self.load(path) for path in list_files(self.config.models, STRUCTURE_EXT)]

    def emit(self, line: str):
        self.lines.append(line)

    # commands

    def validate(self):
        report, code = {}, OK
        paths = self.config.inputs or ((self.config.structure, ) if self.config.structure else ())
        if not paths:
            raise ConfigError("validate requires at least one structure.")
        for path in paths:
            violations = validate_structure(self.sig, load_structure(path, self.sig), self.config.mass_le_one)
            report[path] = [{'kind': v.kind, 'axiom': v.axiom, 'detail': v.detail} for v in violations]
            if violations:
                code = FAILURE
                self.emit(f"{path}: {len(violations)} violation(s)")
                for v in violations:
                    self.emit(f"  {v.kind} [{v.axiom or '-'}] {v.detail}")
            else:
                self.emit(f"{path}: valid")
        return code, {'structures': report}

    def eval(self):
        S = self.structure()
        if self.config.formula is None:
            raise ConfigError("eval requires --formula.")
        phi = parse_formula(self.sig, self.config.formula)
        env = self.assignment(S, self.config.at)
        tolerance = None if self.config.tolerance is None else float(parse_rational(self.config.tolerance))
        report = evaluate(S, phi, env, trace=self.config.trace, tolerance=tolerance)
        if report.trace is not None:
            for entry in report.trace:
                self.emit(f"  {pretty(entry.formula)} {dict(entry.env)} = {_text(entry.value)}")
        self.emit(_text(report.value))
        out = {'formula': pretty(phi), 'at': env, 'value': report.value, 'exact': report.exact}
        if not report.exact:
            out['tolerance'] = report.tolerance
        return OK, out

    def check(self):
        S = self.structure()
        if self.config.theory is None:
            raise ConfigError("check requires --theory.")
        theory = load_theory(self.config.theory, self.sig)
        results, code = [], OK
        for cond in theory:
            holds, margin = check_condition(S, cond)
            results.append({'condition': pretty_condition(cond), 'holds': holds, 'margin': margin})
            self.emit(f"{'ok  ' if holds else 'FAIL'} {pretty_condition(cond)}  (margin {_text(margin)})")
            code = code if holds else FAILURE
        return code, {'conditions': results}

    def _write_structure(self, N, what: str):
        text = dump_structure(N)
        if self.config.out:
            write_text(self.config.out, text)
            self.emit(f"{what} with {N.size} points written to {self.config.out}")
        else:
            self.emit(text.rstrip('\n'))
        return OK, {'points': N.size, 'charge': N.charge.tolist(), 'out': self.config.out}

    def ultramean(self):
        ws = load_weights(self.config.weights)
        models = [self.load(path) for path in self.config.inputs]
        return self._write_structure(build_ultramean(self.sig, ws, models, self.config.product_cap), 'ultramean')

    def powermean(self):
        ws = load_weights(self.config.weights)
        if len(self.config.inputs) != 1:
            raise ConfigError("powermean takes exactly one structure.")
        M = self.load(self.config.inputs[0])
        return self._write_structure(build_powermean(self.sig, ws, M, self.config.product_cap), 'powermean')

    def verify_los(self):
        ws = load_weights(self.config.weights)
        models = [self.load(path) for path in self.config.inputs]
        variables = ('x', )
        family = self.formula_family(variables)
        checker = LosChecker(self.sig, ws, models, self.config.product_cap, progress=not self.config.json)
        choices = None
        if self.config.samples is not None:
            choices = sample_choices(_rng(self.config), models, variables, self.config.samples)
        result = checker.check(family, choices)
        self.emit(f"{len(family)} formulas, {result['checked']} checks, max residual {_text(result['max_residual'])}")
        for phi, residual in result['failures']:
            self.emit(f"  FAIL {pretty(phi)}: residual {_text(residual)}")
        report = {'formulas': len(family), 'checked': result['checked'], 'max_residual': result['max_residual'],
                  'failures': [{'formula': pretty(phi), 'residual': r} for phi, r in result['failures']]}
        return (OK if result['max_residual'] == 0 else FAILURE), report

    def check_proof(self):
        if len(self.config.inputs) != 1:
            raise ConfigError("check-proof takes exactly one script.")
        script = load_proof(self.config.inputs[0], self.sig)
        verdict = check_proof(script)
        report = verdict.to_dict()
        if not verdict.accepted:
            failure = verdict.failure
            self.emit(f"REJECTED at step {failure.id}: {failure.reason}")
            if failure.detail:
                self.emit(f"  {failure.detail}")
            return FAILURE, report
        self.emit(f"ACCEPTED {pretty_condition(script.conclusion)} ({len(script)} steps)")
        if self.config.models:
            probe = soundness_probe(script, self.models(), strict=False)
            report['soundness'] = {'sound': probe['sound'], 'vacuous': probe['vacuous'],
                                   'counterexamples': [list(c) for c in probe['counterexamples']]}
            self.emit(f"soundness probe over {len(probe['outcomes'])} models: "
                      f"{'sound' if probe['sound'] else 'COUNTEREXAMPLE'}")
            if not probe['sound']:
                return FAILURE, report
        return OK, report

    def solve_mixture(self):
        if self.config.models is None or self.config.theory is None:
            raise ConfigError("solve-mixture requires --models and --theory.")
        models = self.models()
        theory = load_theory(self.config.theory, self.sig)
        try:
            solution = solve_mixture(models, theory, self.sig, self.config.method, self.config.product_cap)
        except Infeasible as e:
            self.emit(f"INFEASIBLE over this family of {len(models)} models: {e}")
            return FAILURE, {'feasible': False, 'models': len(models)}
        if self.config.out:
            write_text(self.config.out, dump_weights(solution.weights))
        self.emit(f"weights ({solution.method}): {' '.join(_text(w) for w in solution.weights.weights)}")
        return OK, {'feasible': True, 'method': solution.method, 'weights': list(solution.weights.weights),
                    'margins': list(solution.margins)}

    def check_fubini(self):
        x, y = self.config.x, self.config.y
        if self.config.random is not None:
            rng = _rng(self.config)
            cases = [(random_structure(rng, self.sig), random_formula(rng, self.sig, (x, y, 'z')), x, y)
                     for _ in range(self.config.random)]
            result = FubiniChecker(self.sig, progress=not self.config.json).check(cases)
            self.emit(f"{len(cases)} cases, max residual {_text(result['max_residual'])}")
            return (OK if not result['failures'] else FAILURE), {'cases': len(cases),
                                                                  'max_residual': result['max_residual'],
                                                                  'failures': result['failures']}
        S = self.structure()
        if self.config.formula is None:
            raise ConfigError("check-fubini requires --formula or --random.")
        phi = parse_formula(self.sig, self.config.formula)
        result = check_fubini(S, phi, x, y)
        self.emit(f"max residual {_text(result['max_residual'])} over {result['checked']} assignments")
        return (OK if result['max_residual'] == 0 else FAILURE), {'formula': pretty(phi),
                                                                  'max_residual': result['max_residual'],
                                                                  'checked': result['checked']}

    def type_of(self):
        S = self.structure()
        env = self.assignment(S, self.config.at)
        if not env:
            raise ConfigError("type-of requires --at, e.g. --at x=0.")
        variables, point = tuple(env), tuple(env.values())
        p = realized_type(S, point, self.formula_family(variables), variables)
        for phi, value in zip(p.family, p.values):
            self.emit(f"{pretty(phi)} = {_text(value)}")
        report = {'point': list(point), 'variables': list(variables), 'positive': p.is_positive(),
                  'linearity_failures': [pretty(phi) for phi in p.check_linearity()],
                  'type': {pretty(phi): value for phi, value in zip(p.family, p.values)}}
        if self.config.other is not None:
            other = tuple(self.point(S, v.strip()) for v in self.config.other.split(','))
            distance = type_distance(S, point, other, self.config.depth, self.sig)
            report['distance'] = {'to': list(other), 'depth': self.config.depth, 'value': distance}
            self.emit(f"distance to {list(other)} at depth {self.config.depth}: {_text(distance)}")
        return OK, report

    def elem_check(self):
        M = self.structure()
        if self.config.powermean is not None:
            ws = load_weights(self.config.powermean)
            U = construct_ultramean(self.sig, ws, [M] * ws.size, self.config.product_cap)
            N, f = U.structure, [U.class_of((a, ) * ws.size) for a in range(M.size)]
        else:
            N = self.load(self.config.codomain) if self.config.codomain else M
            f = [int(a) for a in self.config.map.split(',')] if self.config.map else list(range(M.size))
        report = bounded_elementary_check(M, N, f, self.config.depth, self.sig, self.config.arity)
        self.emit(f"{report.formulas} formulas, {report.checked} checks, {len(report.violations)} violation(s)")
        for phi, a, vm, vn in report.violations:
            self.emit(f"  {pretty(phi)} at {list(a)}: {_text(vm)} in M, {_text(vn)} in N")
        return (OK if report.holds else FAILURE), report.to_dict()

    def run(self) -> tuple:
        handler = getattr(self, self.config.command.replace('-', '_'))
        return handler()


def run(config: RunConfig, stream=None) -> int:
    """Runs one command and writes its report to ``stream``.

    Returns:
        int: 0 on success, 1 on a semantic failure (invalid structure, rejected proof, infeasible
        mixture, nonzero residual) and 2 on unreadable or inconsistent input.
    """
    stream = stream or sys.stdout
    runner = Runner(config)
    try:
        config.check()
        code, report = runner.run()
    except InvalidStructure as e:
        logger.error("%s", e)
        violations = [{'kind': v.kind, 'axiom': v.axiom, 'detail': v.detail} for v in e.violations]
        if config.json:
            stream.write(dump_json({'error': type(e).__name__, 'message': str(e), 'violations': violations,
                                    'command': config.command, 'exit_code': FAILURE}))
        else:
            stream.write(f"invalid structure: {e}\n")
            stream.write(''.join(f"  {v['kind']} [{v['axiom'] or '-'}] {v['detail']}\n" for v in violations))
        return FAILURE
    except KernelSoundnessError as e:
        logger.critical("%s", e)
        stream.write(f"internal error: {e}\n")
        return FAILURE
    except (AffineLogicError, OSError) as e:
        logger.error("%s", e)
        if config.json:
            stream.write(dump_json({'error': type(e).__name__, 'message': str(e)}))
        else:
            stream.write(f"error: {e}\n")
        return INPUT_ERROR
    if config.json:
        report = dict(report, command=config.command, exit_code=code)
        stream.write(dump_json(report))
    else:
        stream.write(''.join(line + '\n' for line in runner.lines))
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='affinelogic', description="affine integration logic over finite structures")
    parser.add_argument('command', choices=COMMANDS, type=str, help="what to run")
    parser.add_argument('inputs', nargs='*', type=str, help="structures (validate, ultramean, powermean, "
                        "verify-los) or a proof script (check-proof)")
    parser.add_argument('--structure', default=None, type=str, help="a .alstr structure")
    parser.add_argument('--codomain', default=None, type=str, help="codomain structure of elem-check")
    parser.add_argument('--signature', default=None, type=str, help="a .alsig signature, empty by default")
    parser.add_argument('--formula', default=None, type=str, help="a formula in concrete syntax")
    parser.add_argument('--formulas', default=None, type=str, help="a .alf formula list")
    parser.add_argument('--theory', default=None, type=str, help="a .alth theory")
    parser.add_argument('--weights', default=None, type=str, help="a .alw weight list")
    parser.add_argument('--models', default=None, type=str, help="directory of .alstr models")
    parser.add_argument('--out', '--weights-out', dest='out', default=None, type=str, help="output file")
    parser.add_argument('--at', default=None, type=str, help="environment, e.g. x=0,y=1")
    parser.add_argument('--other', '--distance-to', dest='other', default=None, type=str,
                        help="second tuple of type-of, e.g. 1 or 0,1")
    parser.add_argument('--map', default=None, type=str, help="images of the points for elem-check, e.g. 1,0")
    parser.add_argument('--powermean', default=None, type=str, help="elem-check the diagonal into this powermean")
    parser.add_argument('--grid', default=None, type=int, help="use the unit-interval grid with this many points")
    parser.add_argument('--float', action='store_true', help="float64 fast path on --grid")
    parser.add_argument('--tolerance', default=None, type=str, help="tolerance reported with --float")
    parser.add_argument('--depth', default=None, type=int, help="formula depth bound, atoms have depth 1")
    parser.add_argument('--arity', default=1, type=int, help="tuple length of elem-check")
    parser.add_argument('--seed', default=None, type=int, help="seed of randomized runs")
    parser.add_argument('--samples', default=None, type=int, help="sampled tuples for verify-los")
    parser.add_argument('--random', default=None, type=int, help="random cases for check-fubini")
    parser.add_argument('--method', default='auto', choices=('auto', 'simplex', 'fourier-motzkin'), type=str,
                        help="feasibility method of solve-mixture")
    parser.add_argument('--x', default='x', type=str, help="first integration variable of check-fubini")
    parser.add_argument('--y', default='y', type=str, help="second integration variable of check-fubini")
    parser.add_argument('--product-cap', dest='product_cap', default=None, type=int,
                        help="largest raw product, overrides AL_PRODUCT_CAP")
    parser.add_argument('--mass-le-one', dest='mass_le_one', action='store_true', help="accept total charge <= 1")
    parser.add_argument('--trace', action='store_true', help="print every subformula value of eval")
    parser.add_argument('--json', action='store_true', help="JSON report")
    parser.add_argument('--log-level', dest='log_level', default='WARNING', type=str,
                        choices=('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'), help="logging level")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(format=FORMAT, level=getattr(logging, args.log_level))
    return run(RunConfig.from_args(args))


if __name__ == '__main__':
    sys.exit(main())
