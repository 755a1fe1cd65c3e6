from fractions import Fraction
from tqdm import tqdm
import numpy as np
import argparse
import itertools
import logging
import os
from datetime import datetime

import affinelogic as al


def get_exp_id(args):
    return f'{args.name}_{args.sweep}_{args.trials}_{args.seed}'


def get_signature(args):
    if args.signature is not None:
        return al.load_signature(args.signature)
    return al.Signature.build(constants=('c', ), functions={'f': (1, 1)},
                              relations={'P': (1, Fraction(1, 2)), 'Q': (2, 1)})


def random_family(rng, sig, args):
    m = rng.randint(1, args.max_factors + 1)
    ws = al.UltrachargeSpace(al.random_weights(rng, m))
    models = [al.random_structure(rng, sig, max_points=args.max_points) for _ in range(m)]
    return ws, models


def catalogue_families(args):
    catalogue = al.structure_catalogue(args.max_points, [Fraction(d) for d in args.distances.split(',')])
    logging.info(f"{len(catalogue)} catalogue structures with at most {args.max_points} points")
    for m in range(1, args.max_factors + 1):
        for models in itertools.combinations_with_replacement(catalogue, m):
            for weights in al.weight_grid(m):
                yield al.UltrachargeSpace(weights), list(models)


def sweep_los(rng, sig, args):
    # every catalogue family against every formula of the empty signature, so rng and sig are unused
    formulas = al.FormulaEnumerator(al.EMPTY_SIGNATURE).up_to(args.depth, ('x', ))
    logging.info(f"{len(formulas)} formulas of depth <= {args.depth}")
    worst, checked, failures, families = Fraction(0), 0, 0, 0
    for ws, models in tqdm(list(catalogue_families(args)), leave=True, position=0):
        result = al.LosChecker(al.EMPTY_SIGNATURE, ws, models).check(formulas)
        worst = max(worst, result['max_residual'])
        checked += result['checked']
        failures += len(result['failures'])
        families += 1
    return {'max_residual': worst, 'checked': checked, 'failures': failures, 'families': families}


def sweep_los_random(rng, sig, args):
    formulas = al.enumerate_formulas(sig, ('x', ), args.depth)
    logging.info(f"{len(formulas)} formulas of depth <= {args.depth}")
    worst, checked, failures = Fraction(0), 0, 0
    for _ in tqdm(range(args.trials), leave=True, position=0):
        ws, models = random_family(rng, sig, args)
        result = al.LosChecker(sig, ws, models).check(formulas)
        worst = max(worst, result['max_residual'])
        checked += result['checked']
        failures += len(result['failures'])
    return {'max_residual': worst, 'checked': checked, 'failures': failures}


def sweep_soundness(rng, sig, args):
    models = [al.random_structure(rng, sig, max_points=args.max_points) for _ in range(args.models)]
    steps, counterexamples, vacuous = 0, 0, 0
    for _ in tqdm(range(args.trials), leave=True, position=0):
        script = al.random_script(rng, sig, length=args.length, n_hypotheses=rng.randint(0, 3))
        report = al.soundness_probe(script, models, strict=False)
        steps += len(script)
        counterexamples += len(report['counterexamples'])
        vacuous += len(report['vacuous'])
    return {'steps': steps, 'counterexamples': counterexamples, 'vacuous_models': vacuous}


def sweep_mixture(rng, sig, args):
    # targets are read off the ultramean of hidden weights, so every theory is satisfiable by the family
    infeasible, negative, methods = 0, 0, {}
    for _ in tqdm(range(args.trials), leave=True, position=0):
        hidden, models = random_family(rng, sig, args)
        U = al.build_ultramean(sig, hidden, models)
        theory = []
        for _ in range(rng.randint(1, 4)):
            phi = al.random_sentence(rng, sig, args.depth)
            theory.extend(al.Condition.equality(phi, al.numeral(al.eval_formula(U, phi))))
        try:
            solution = al.solve_mixture(models, theory, sig)
        except al.Infeasible:
            infeasible += 1
            logging.warning(f"no mixture found for hidden weights {[str(w) for w in hidden.weights]}")
            continue
        methods[solution.method] = methods.get(solution.method, 0) + 1
        negative += int(any(margin < 0 for margin in solution.margins))
    return {'infeasible': infeasible, 'negative_margins': negative, 'methods': methods}


def sweep_invariants(rng, sig, args):
    bound_failures, lipschitz_failures, checked = 0, 0, 0
    for _ in tqdm(range(args.trials), leave=True, position=0):
        S = al.random_structure(rng, sig, max_points=args.max_points)
        tables = al.ValueTables(S)
        for _ in range(args.formulas):
            phi = al.random_formula(rng, sig, ('x', ), args.depth)
            lipschitz, bound = al.formula_lipschitz_bound(sig, phi)
            values = tables.table(phi, ('x', ))
            bound_failures += int(any(abs(v) > bound for v in values))
            gaps = np.abs(values[:, None] - values[None, :])
            lipschitz_failures += int(any(gaps[a, b] > lipschitz * S.metric[a, b]
                                          for a in range(S.size) for b in range(S.size)))
            checked += 1
    return {'bound_failures': bound_failures, 'lipschitz_failures': lipschitz_failures, 'checked': checked}


def sweep_fubini(rng, sig, args):
    cases = [(al.random_structure(rng, sig, max_points=args.max_points),
              al.random_formula(rng, sig, ('x', 'y', 'z'), args.depth), 'x', 'y') for _ in range(args.trials)]
    return al.FubiniChecker(sig, progress=True).check(cases)


SWEEPS = {
    'los': sweep_los,
    'los-random': sweep_los_random,
    'soundness': sweep_soundness,
    'mixture': sweep_mixture,
    'invariants': sweep_invariants,
    'fubini': sweep_fubini,
}


def main(args):
    sig = get_signature(args)
    rng = np.random.RandomState(args.seed)
    names = list(SWEEPS) if args.sweep == 'all' else [args.sweep]
    for name in names:
        tik = datetime.now()
        result = SWEEPS[name](rng, sig, args)
        print(f"{name}:\t", result)
        logging.info(f"{name}:\t {result}")
        logging.info(f"{name} time: {datetime.now() - tik} s.")
    return


if __name__ == '__main__':
    parser = argparse.ArgumentParser()
    parser.add_argument('--name', default="default", type=str, help="name of experiments")
    parser.add_argument('--sweep', default="all", choices=['all'] + list(SWEEPS), type=str, help="sweep to run")
    parser.add_argument('--signature', default=None, type=str, help="a .alsig signature, a small mixed one by default")
    parser.add_argument('--seed', default=0, type=int, help="seed of every random choice")
    parser.add_argument('--trials', default=50, type=int, help="random structures, scripts or families per sweep")
    parser.add_argument('--depth', default=3, type=int, help="formula depth, atoms have depth 1")
    parser.add_argument('--max_points', default=3, type=int, help="largest random structure")
    parser.add_argument('--max_factors', default=3, type=int, help="largest model family")
    parser.add_argument('--distances', default="1", type=str,
                        help="comma separated distances of the exhaustive catalogue, e.g. 1/2,1")
    parser.add_argument('--models', default=20, type=int, help="models of the soundness probe")
    parser.add_argument('--length', default=12, type=int, help="steps of the random proof scripts")
    parser.add_argument('--formulas', default=20, type=int, help="formulas per structure of the invariant sweep")
    args = parser.parse_args()

    tik = datetime.now()
    os.makedirs('./work_dirs', exist_ok=True)
    FORMAT = '%(asctime)-15s %(message)s'

    logging.basicConfig(
        filename=f'./work_dirs/{get_exp_id(args)}.log',
        filemode='w',
        format=FORMAT,
        level=getattr(logging, 'INFO')
    )
    logging.info(f'{args}\n')
    print(args)

    main(args)

    logging.info(f"Time: {datetime.now() - tik} s.")
