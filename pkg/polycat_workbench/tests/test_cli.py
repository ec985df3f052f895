"""
Unit tests for the polycat command line
"""
import unittest

from ..constants import EXIT_FAILS, EXIT_HOLDS, EXIT_INPUT_ERROR, SEED_ENV, VERDICT_FAILS, VERDICT_HOLDS
from ..controllers.cli_controller import parse_boundary, parse_vector, run_command
from ..exceptions import UnknownCommand
from .common import data_path


class TestCommandLine(unittest.TestCase):
    """Test verdicts, values and exit codes of each command family"""

    def setUp(self):
        self.environ = {}

    def run_cli(self, *argv):
        return run_command(list(argv), environ=self.environ)

    def test_norm_values(self):
        """Exact values are printed as p/q"""
        report, code = self.run_cli('norm', 'proj', data_path('u.json'), data_path('l1.json'), data_path('l1.json'))
        self.assertEqual((report.value, code), ('2/1', EXIT_HOLDS))
        self.assertEqual(report.render(), '2/1\n')
        report, _ = self.run_cli('norm', 'gauge', data_path('l1.json'), '1,-5/2')
        self.assertEqual(report.value, '7/2')

    def test_norm_crosscheck(self):
        """The projective candidate is extremal, a doubled one is not"""
        norms = [data_path('l1.json'), data_path('linf.json')]
        report, code = self.run_cli('norm', 'crosscheck', 'projective', *norms)
        self.assertEqual(code, EXIT_HOLDS)
        self.assertEqual(report.verdict, VERDICT_HOLDS)

    def test_check_polycat(self):
        """The corrupted germ fails, the clean germ holds"""
        report, code = self.run_cli('check', 'polycat', data_path('corrupted.json'))
        self.assertEqual((report.verdict, code), (VERDICT_FAILS, EXIT_FAILS))
        self.assertTrue(any('right-unit fails' in entry for entry in report.evidence))
        _, code = self.run_cli('check', 'polycat', data_path('z2-germ.json'))
        self.assertEqual(code, EXIT_HOLDS)

    def test_input_errors(self):
        """Rejected inputs exit 2 with the error kind first"""
        report, code = self.run_cli('check', 'polycat', data_path('noncommutative.json'))
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertTrue(report.evidence[0].startswith('not_commutative: '))
        _, code = self.run_cli('check', 'polycat', data_path('missing.json'))
        self.assertEqual(code, EXIT_INPUT_ERROR)

    def test_unknown_command(self):
        """Unrecognised command lines exit 2"""
        report, code = self.run_cli('frobnicate')
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertTrue(report.evidence[0].startswith('unknown_command: '))

    def test_categories_and_distributors(self):
        """Category and distributor files check"""
        _, code = self.run_cli('check', 'category', data_path('arrow.json'))
        self.assertEqual(code, EXIT_HOLDS)
        _, code = self.run_cli('check', 'distributor', data_path('hom-arrow.json'))
        self.assertEqual(code, EXIT_HOLDS)

    def test_universal(self):
        """An invertible polymap is universal and cartesian over terminal"""
        report, code = self.run_cli('universal', data_path('z2-germ.json'), '--map', 'a', '--pos', '0')
        self.assertEqual(code, EXIT_HOLDS)
        self.assertEqual(report.evidence[1], 'cartesian over terminal: holds')

    def test_birep(self):
        """Identities alone are not birepresentable"""
        _, code = self.run_cli('birep', data_path('identities-1.json'))
        self.assertEqual(code, EXIT_FAILS)

    def test_elements(self):
        """Twisted functors are representable, the diagonal is not"""
        _, code = self.run_cli('elements', 'mvar', data_path('twisted-z2.json'))
        self.assertEqual(code, EXIT_HOLDS)
        _, code = self.run_cli('elements', 'mvar', data_path('diagonal.json'))
        self.assertEqual(code, EXIT_FAILS)

    def test_free_and_export(self):
        """Expressions compose and export"""
        expression = 'graft(op[f],0,op[g],0)'
        report, code = self.run_cli('free', 'compose', data_path('fg-signature.json'), expression)
        self.assertEqual(code, EXIT_HOLDS)
        self.assertIn('nodes: 2', report.evidence)
        report, _ = self.run_cli('export', 'dot', data_path('fg-signature.json'), expression)
        self.assertTrue(report.value.startswith('digraph "tree" {'))

    def test_deterministic(self):
        """Equal inputs render equal reports"""
        self.environ = {SEED_ENV: '3'}
        one, _ = self.run_cli('elements', 'mvar', 'random')
        two, _ = self.run_cli('elements', 'mvar', 'random')
        self.assertEqual(one.render(), two.render())
        self.assertEqual(one.command, 'elements mvar random')


class TestArgumentParsing(unittest.TestCase):
    """Test vector and boundary arguments"""

    def setUp(self):
        self.boundary = parse_boundary('A,B->B')

    def test_boundary(self):
        """Boundaries split at the arrow; empty sides are allowed"""
        self.assertEqual((self.boundary.domain, self.boundary.codomain), (('A', 'B'), ('B',)))
        self.assertEqual(parse_boundary('->A').domain, ())
        with self.assertRaises(UnknownCommand):
            parse_boundary('A,B')

    def test_vector(self):
        """Vectors are comma separated rationals"""
        self.assertEqual([str(x) for x in parse_vector('1/2,-1')], ['1/2', '-1'])


if __name__ == '__main__':
    unittest.main()
