import os.path as osp
import unittest
from fractions import Fraction

import numpy as np

from affinelogic.semantics import FiniteChargedStructure, two_point_structure

FIXTURES = osp.join(osp.dirname(osp.abspath(__file__)), 'fixtures')


def fixture(name: str) -> str:
    return osp.join(FIXTURES, name)


def assert_fractions_equal(test: unittest.TestCase, actuals, desires):
    """Exact, elementwise comparison; both sides are converted to ``Fraction``."""
    actuals = np.asarray(actuals, dtype=object)
    desires = np.asarray(desires, dtype=object)
    test.assertEqual(actuals.shape, desires.shape)
    for a, b in zip(actuals.ravel(), desires.ravel()):
        test.assertEqual(Fraction(a), Fraction(b))


def two_point(charge=(Fraction(1, 2), Fraction(1, 2)), c=None) -> FiniteChargedStructure:
    """The two-point space, optionally with the constant ``c`` at point ``c``."""
    return two_point_structure(charge, None if c is None else {'c': c})


def singleton() -> FiniteChargedStructure:
    return FiniteChargedStructure(['0'], [[0]], [1])
