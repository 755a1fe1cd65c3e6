import abc
import os
import shutil
import tempfile
import unittest
from fractions import Fraction

from affinelogic.common.abc_checker import StructureChecker
from affinelogic.common.errors import ALSyntaxError, ConfigError, SchemaError, SourceSpan
from affinelogic.common.file_utils import THEORY_EXT, list_files, read_text, write_text
from affinelogic.common.python_utils import DEFAULT_PRODUCT_CAP, PRODUCT_CAP_ENV, get_product_cap
from affinelogic.common.rationals import format_rational, parse_rational
from affinelogic.syntax import EMPTY_SIGNATURE


class TestRationals(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(parse_rational('1/2'), Fraction(1, 2))
        self.assertEqual(parse_rational('0.25'), Fraction(1, 4))
        self.assertEqual(parse_rational('-3'), -3)
        self.assertEqual(parse_rational(' 2/4 '), Fraction(1, 2))
        self.assertEqual(parse_rational(7), 7)

    def test_refused(self):
        for value in (0.5, True, '1/0', 'half', '1e-3', None):
            with self.assertRaises(ALSyntaxError):
                parse_rational(value, SourceSpan('x.alth', 3, 4))
        with self.assertRaises(ALSyntaxError) as cm:
            parse_rational('1/0', SourceSpan('x.alth', 3, 4))
        self.assertEqual(str(cm.exception.span), 'x.alth:3:4')

    def test_format(self):
        self.assertEqual(format_rational(Fraction(2, 4)), '1/2')
        self.assertEqual(format_rational(Fraction(-3)), '-3')
        self.assertEqual(format_rational(0), '0')


class TestProductCap(unittest.TestCase):

    def setUp(self):
        self.saved = os.environ.pop(PRODUCT_CAP_ENV, None)

    def tearDown(self):
        os.environ.pop(PRODUCT_CAP_ENV, None)
        if self.saved is not None:
            os.environ[PRODUCT_CAP_ENV] = self.saved

    def test_resolution(self):
        self.assertEqual(get_product_cap(), DEFAULT_PRODUCT_CAP)
        os.environ[PRODUCT_CAP_ENV] = '64'
        self.assertEqual(get_product_cap(), 64)
        self.assertEqual(get_product_cap(8), 8)

    def test_invalid(self):
        with self.assertRaises(ConfigError):
            get_product_cap(0)
        os.environ[PRODUCT_CAP_ENV] = 'many'
        with self.assertRaises(ConfigError):
            get_product_cap()


class TestFileUtils(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_write_then_read(self):
        path = write_text(os.path.join(self.tmp, 'sub', 'a.alth'), '1 <= 1\n')
        self.assertEqual(read_text(path, THEORY_EXT), '1 <= 1\n')
        self.assertFalse(os.path.exists(path + '_tmp'))
        self.assertEqual(list_files(os.path.join(self.tmp, 'sub'), THEORY_EXT), [path])

    def test_extension(self):
        path = write_text(os.path.join(self.tmp, 'a.txt'), '')
        with self.assertRaises(SchemaError):
            read_text(path, THEORY_EXT)
        with self.assertRaises(SchemaError):
            list_files(os.path.join(self.tmp, 'missing'), THEORY_EXT)


class TestStructureChecker(unittest.TestCase):

    def test_check_is_abstract(self):
        with self.assertRaises(TypeError):
            StructureChecker(EMPTY_SIGNATURE)

        class Agreeing(StructureChecker):

            def check(self, cases) -> dict:
                return {'failures': [], 'checked': len(cases)}

        checker = Agreeing(EMPTY_SIGNATURE, progress=True)
        self.assertIsInstance(checker, abc.ABC)
        self.assertTrue(checker.progress)
        self.assertEqual(checker.check([1, 2]), {'failures': [], 'checked': 2})


if __name__ == '__main__':
    unittest.main()
