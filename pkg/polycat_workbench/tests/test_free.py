"""
Unit tests for planar trees, expressions and the free polycategory
"""
import unittest

from ..constants import DEFAULT_MAX_NODES
from ..exceptions import InputSyntaxError, MalformedTree, TypeMismatch, UnknownOperation
from ..models.polycategory import Boundary
from ..models.signature import TreeEdge, TreePolymap, generator_tree, graft, identity_tree
from ..services.free_service import (
    all_trees, check_free_laws, enumerate_trees, FreePolycategory, two_operation_signature,
)
from ..services.parser_factory import parse_input
from ..services.transformers import TermTransformer
from .common import data_path


class TestTrees(unittest.TestCase):
    """Test grafting and canonical encodings"""

    def setUp(self):
        self.signature = two_operation_signature()
        self.f = generator_tree(self.signature, 'f')
        self.g = generator_tree(self.signature, 'g')

    def test_composite_boundary(self):
        """f then g then f has boundary A,B,B -> A,B"""
        tree = graft(graft(self.f, 0, self.g, 0), 1, self.f, 0)
        self.assertEqual(tree.boundary, Boundary(('A', 'B', 'B'), ('A', 'B')))
        self.assertEqual(tree.size, 3)

    def test_grafting_is_associative(self):
        """Both bracketings give the same encoding"""
        left = graft(graft(self.f, 0, self.g, 0), 1, self.f, 0)
        right = graft(self.f, 0, graft(self.g, 1, self.f, 0), 0)
        self.assertEqual(left.encoding(), right.encoding())
        self.assertEqual(left, right)

    def test_identity_is_neutral(self):
        """Grafting an identity changes nothing"""
        self.assertEqual(graft(self.f, 0, identity_tree(self.signature, 'B'), 0), self.f)
        self.assertEqual(graft(identity_tree(self.signature, 'A'), 0, self.f, 0), self.f)

    def test_type_mismatch(self):
        """Grafting g's A output into f's B input is rejected"""
        with self.assertRaises(TypeMismatch):
            graft(self.g, 0, self.f, 1)

    def test_malformed_tree(self):
        """An unsaturated port is reported"""
        edge = TreeEdge(0, 'A', ('dom', 0), ('in', 0, 0))
        tree = TreePolymap(self.signature, ((0, 'f'),), (edge,), Boundary(('A',), ()))
        with self.assertRaises(MalformedTree):
            tree.encoding()


class TestEnumeration(unittest.TestCase):
    """Test tree enumeration"""

    def setUp(self):
        self.signature = two_operation_signature()

    def test_generator_hom(self):
        """The only one-node tree A,B -> B is f"""
        trees = enumerate_trees(self.signature, Boundary(('A', 'B'), ('B',)), max_nodes=1)
        self.assertEqual(trees, [generator_tree(self.signature, 'f')])

    def test_no_tree_with_only_A_inputs(self):
        """Every operation consumes a B, so no tree up to the default size has inputs A,A"""
        trees = all_trees(self.signature, DEFAULT_MAX_NODES)
        self.assertTrue(any(len(t.boundary.domain) == 2 for t in trees))
        self.assertFalse([t.encoding() for t in trees if t.boundary.domain == ('A', 'A')])
        self.assertEqual(enumerate_trees(self.signature, Boundary(('A', 'A'), ('A', 'A')), DEFAULT_MAX_NODES), [])

    def test_enumeration_is_sorted_and_unique(self):
        """Results are sorted by encoding without duplicates"""
        trees = enumerate_trees(self.signature, Boundary(('A', 'B', 'B'), ('A', 'B')), max_nodes=3)
        codes = [t.encoding() for t in trees]
        self.assertEqual(codes, sorted(set(codes)))
        self.assertIn(graft(graft(generator_tree(self.signature, 'f'), 0, generator_tree(self.signature, 'g'), 0),
                            1, generator_tree(self.signature, 'f'), 0), trees)

    def test_free_polycategory_identity(self):
        """Identities of the free polycategory are the node-free trees"""
        P = FreePolycategory(self.signature, 2, 1)
        self.assertEqual(P.tree(P.identity('A')), identity_tree(self.signature, 'A'))
        self.assertTrue(P.bound_relative)

    def test_free_laws(self):
        """The five laws hold as encoding equalities"""
        report = check_free_laws(self.signature, max_item_nodes=1, arity_bound=3)
        self.assertTrue(report.passed)
        self.assertGreater(sum(report.instances.values()), 0)


class TestTermTransformer(unittest.TestCase):
    """Test expression parsing and DOT export"""

    def setUp(self):
        self.signature = parse_input(data_path('fg-signature.json'))

    def test_parse_expression(self):
        """Expressions build the same tree as direct grafting"""
        tree = TermTransformer.parse_expression('graft(graft(op[f],0,op[g],0),1,op[f],0)', self.signature)
        self.assertEqual(tree.boundary, Boundary(('A', 'B', 'B'), ('A', 'B')))

    def test_syntax_error_position(self):
        """Syntax errors carry line and column"""
        with self.assertRaises(InputSyntaxError) as ctx:
            TermTransformer.parse_expression('graft(op[f],0\n op[g],0)', self.signature)
        self.assertEqual(ctx.exception.line, 2)

    def test_unknown_operation(self):
        """Unknown operation names are reported"""
        with self.assertRaises(UnknownOperation):
            TermTransformer.parse_expression('op[h]', self.signature)

    def test_dot_export(self):
        """DOT output names the graph and labels every edge"""
        tree = TermTransformer.parse_expression('op[f]', self.signature)
        dot = TermTransformer.tree_to_dot(tree, name='f')
        self.assertTrue(dot.startswith('digraph "f" {'))
        self.assertIn('n0 [label="f"];', dot)
        self.assertEqual(dot.count('->'), 3)
        self.assertTrue(dot.endswith('}\n'))


if __name__ == '__main__':
    unittest.main()
