# Files within this path, contain finite charged metric structures, their validation, the exact
# evaluation of formulas and the quotient of prestructures.

from .structure import FiniteChargedStructure
from .validation import Violation, validate_structure
from .tables import ValueTables, value_table
from .evaluation import Environment, TraceEntry, ValueReport, eval_term, eval_formula, evaluate, environments, \
    check_condition
from .quotient import DisjointSet, quotient_map, quotient_structure
from .builders import discrete_structure, two_point_structure, unit_interval_grid, grid_point, random_metric, \
    random_charge, random_structure, random_weights, weight_grid, structure_catalogue

__all__ = [
    'FiniteChargedStructure', 'Violation', 'validate_structure', 'ValueTables', 'value_table', 'Environment',
    'TraceEntry', 'ValueReport', 'eval_term', 'eval_formula', 'evaluate', 'environments', 'check_condition',
    'DisjointSet', 'quotient_map', 'quotient_structure', 'discrete_structure', 'two_point_structure',
    'unit_interval_grid', 'grid_point', 'random_metric', 'random_charge', 'random_structure', 'random_weights',
    'weight_grid', 'structure_catalogue'
]
