"""
Unit tests for input documents and the parser registry
"""
import json
import os
import unittest

from ..constants import INPUT_KINDS
from ..exceptions import InputSyntaxError, InvariantError, NotCommutative, SchemaError
from ..models.distributor import FinDistributor
from ..models.lax_functor import LaxNormalFunctor
from ..models.polycategory import FinPolycategory
from ..services.parser_factory import ParserFactory, load_document, parse_input, parse_text
from .common import DATA_DIR, data_path

DISCRETE_X = {'kind': 'fincat', 'objects': ['x'], 'shape': 'discrete'}


def explicit_distributor(ins):
    return {
        'kind': 'distributor',
        'inputs': [DISCRETE_X],
        'outputs': [DISCRETE_X],
        'elements': [{'ins': ins, 'outs': ['x'], 'names': ['e']}],
        'actions': [
            {'side': 'in', 'slot': 0, 'morphism': 'id:x', 'ins': ['x'], 'outs': ['x'], 'element': 'e', 'result': 'e'},
            {'side': 'out', 'slot': 0, 'morphism': 'id:x', 'ins': ['x'], 'outs': ['x'], 'element': 'e', 'result': 'e'},
        ],
    }


class TestParserFactory(unittest.TestCase):
    """Test the registry and document dispatch"""

    def setUp(self):
        self.parsers = ParserFactory.get_available_parsers()

    def test_every_kind_registered(self):
        """Each input kind has a parser"""
        self.assertEqual(sorted(self.parsers), sorted(INPUT_KINDS))

    def test_unknown_kind(self):
        """Unknown kinds are schema errors at the kind field"""
        with self.assertRaises(SchemaError) as ctx:
            load_document({'kind': 'nope'})
        self.assertEqual(ctx.exception.path, ['kind'])

    def test_missing_field(self):
        """Required fields are enforced by the schema"""
        with self.assertRaises(SchemaError) as ctx:
            load_document({'kind': 'fincat'})
        self.assertEqual(ctx.exception.error_code, 'schema')

    def test_expected_kind(self):
        """A nested reference must have the expected kind"""
        with self.assertRaises(SchemaError):
            parse_input(data_path('l1.json'), expected='tensor')

    def test_syntax_error_position(self):
        """Malformed JSON reports line and column"""
        with self.assertRaises(InputSyntaxError) as ctx:
            parse_text('{\n  "kind": \n}')
        self.assertEqual(ctx.exception.line, 3)
        self.assertEqual(ctx.exception.column, 1)


class TestDataFiles(unittest.TestCase):
    """Test the bundled presentations"""

    def setUp(self):
        self.names = sorted(name for name in os.listdir(DATA_DIR) if name.endswith('.json'))

    def test_every_file_loads(self):
        """All bundled files load except the noncommutative table"""
        for name in self.names:
            if name == 'noncommutative.json':
                with self.assertRaises(NotCommutative):
                    parse_input(data_path(name))
                continue
            self.assertIsNotNone(parse_input(data_path(name)), name)

    def test_kinds_build_models(self):
        """Documents build the model of their kind"""
        self.assertIsInstance(parse_input(data_path('z3.json')), FinPolycategory)
        self.assertIsInstance(parse_input(data_path('hom-arrow.json')), FinDistributor)
        self.assertIsInstance(parse_input(data_path('singleton.json')), LaxNormalFunctor)

    def test_nested_path_is_relative(self):
        """Paths inside documents resolve against the containing file"""
        with open(data_path('hom-arrow.json'), encoding='utf-8') as handle:
            self.assertEqual(json.load(handle)['hom'], 'arrow.json')
        self.assertEqual(parse_input(data_path('hom-arrow.json')).inputs[0].name, 'arrow')


class TestExplicitDistributors(unittest.TestCase):
    """Test distributors given by element and action tables"""

    def setUp(self):
        self.document = explicit_distributor(['x'])

    def test_valid_table(self):
        """A one-element distributor over discrete categories loads"""
        D = load_document(self.document)
        self.assertEqual(D.size(), 1)

    def test_wrong_tuple_length(self):
        """Element tuples must match the number of inputs"""
        with self.assertRaises(InvariantError) as ctx:
            load_document(explicit_distributor(['x', 'x']))
        self.assertEqual(ctx.exception.check, 'tuples')


if __name__ == '__main__':
    unittest.main()
