"""
Unit tests for configuration resolution and the workspace
"""
import unittest

from ..constants import ARITY_BOUND_ENV, DEFAULT_ARITY_BOUND, DEFAULT_SEED, SEED_ENV
from ..exceptions import InvariantError, PolycatError
from ..models.monoid_polycategory import terminal
from ..models.workspace import Workspace, WorkspaceConfiguration


class TestConfiguration(unittest.TestCase):
    """Test flag, environment and default precedence"""

    def setUp(self):
        self.environ = {ARITY_BOUND_ENV: '3', SEED_ENV: '17'}

    def test_defaults(self):
        """Nothing set gives the defaults"""
        configuration = WorkspaceConfiguration.resolve(environ={})
        self.assertEqual(configuration.arity_bound, DEFAULT_ARITY_BOUND)
        self.assertEqual(configuration.seed, DEFAULT_SEED)

    def test_environment_over_default(self):
        """Environment variables override defaults"""
        configuration = WorkspaceConfiguration.resolve(environ=self.environ)
        self.assertEqual((configuration.arity_bound, configuration.seed), (3, 17))

    def test_flag_over_environment(self):
        """Explicit values override the environment"""
        configuration = WorkspaceConfiguration.resolve(arity_bound=2, seed=5, environ=self.environ)
        self.assertEqual((configuration.arity_bound, configuration.seed), (2, 5))

    def test_blank_environment_ignored(self):
        """An empty variable counts as unset"""
        configuration = WorkspaceConfiguration.resolve(environ={ARITY_BOUND_ENV: ' '})
        self.assertEqual(configuration.arity_bound, DEFAULT_ARITY_BOUND)

    def test_bad_environment(self):
        """Unparsable and non-positive bounds are rejected"""
        with self.assertRaises(InvariantError) as ctx:
            WorkspaceConfiguration.resolve(environ={ARITY_BOUND_ENV: 'four'})
        self.assertEqual(ctx.exception.check, ARITY_BOUND_ENV)
        with self.assertRaises(InvariantError):
            WorkspaceConfiguration.resolve(arity_bound=0, environ={})


class TestWorkspace(unittest.TestCase):
    """Test named presentations"""

    def setUp(self):
        self.workspace = Workspace()

    def test_add_and_get(self):
        """Presentations are retrieved by name"""
        P = self.workspace.add('t', terminal(2))
        self.assertIs(self.workspace.get('t'), P)
        self.assertIn('t', self.workspace)
        self.assertEqual(self.workspace.names(), ('t',))

    def test_duplicate_name(self):
        """Names are unique within a workspace"""
        self.workspace.add('t', terminal(2))
        with self.assertRaises(PolycatError) as ctx:
            self.workspace.add('t', terminal(3))
        self.assertEqual(ctx.exception.error_code, 'duplicate_name')

    def test_missing_name(self):
        """Unknown names raise"""
        with self.assertRaises(PolycatError):
            self.workspace.get('absent')


if __name__ == '__main__':
    unittest.main()
