# Files within this path, contain the mixture solver over finite model families (exact linear
# feasibility), realized types and their distance, iterated charges and finite Fubini, witnesses and
# mean values, and bounded elementarity checks.

from .lp import SIMPLEX, FOURIER_MOTZKIN, FeasibilityTableau, simplex_feasible, fourier_motzkin, simplex_mixture, \
    fourier_motzkin_mixture, choose_method, feasible_mixture
from .mixture import MixtureProblem, MixtureSolution, solve_mixture
from .types import RealizedType, realized_type, plus_map, type_table, type_distance, default_variables
from .charges import product_charge, iterated_charge, nest_integrals, check_fubini, check_permutations, \
    FubiniChecker
from .elementary import DEFAULT_TUPLE_BUDGET, ElementaryReport, ElementaryChecker, bounded_elementary_check
from .witness import WitnessReport, witnesses

__all__ = [
    'SIMPLEX', 'FOURIER_MOTZKIN', 'FeasibilityTableau', 'simplex_feasible', 'fourier_motzkin', 'simplex_mixture',
    'fourier_motzkin_mixture', 'choose_method', 'feasible_mixture', 'MixtureProblem', 'MixtureSolution',
    'solve_mixture', 'RealizedType', 'realized_type', 'plus_map', 'type_table', 'type_distance',
    'default_variables', 'product_charge', 'iterated_charge', 'nest_integrals', 'check_fubini',
    'check_permutations', 'FubiniChecker', 'DEFAULT_TUPLE_BUDGET', 'ElementaryReport', 'ElementaryChecker',
    'bounded_elementary_check', 'WitnessReport', 'witnesses'
]
