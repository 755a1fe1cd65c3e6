# Files within this path, contain the ultramean and powermean constructions over finite index sets,
# and the checks of the ultramean theorem and of the diagonal embedding.

from .charge_space import UltrachargeSpace
from .construction import Ultramean, product_prestructure, construct_ultramean, build_ultramean, build_powermean
from .los import LosChecker, verify_ultramean_theorem, sample_choices, DiagonalReport, diagonal_embedding, \
    atom_charge_formula

__all__ = [
    'UltrachargeSpace', 'Ultramean', 'product_prestructure', 'construct_ultramean', 'build_ultramean',
    'build_powermean', 'LosChecker', 'verify_ultramean_theorem', 'sample_choices', 'DiagonalReport',
    'diagonal_embedding', 'atom_charge_formula'
]
