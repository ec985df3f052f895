"""
Unit tests for finite categories and distributors
"""
import unittest

from ..constants import SIDE_IN, SIDE_OUT
from ..exceptions import BoundaryMismatch, InvariantError
from ..models.distributor import FinDistributor
from ..models.fin_category import FinCategory, Morphism, codiscrete, discrete
from ..models.monoid_polycategory import terminal
from ..models.polycategory import Boundary, PolyMap
from ..services.distributor_service import (
    associator_check, co_yoneda_check, compose_distributors, hom_distributor, representable_in,
)
from ..services.elements_service import diagonal_functor
from ..services.parser_factory import parse_input
from .common import data_path


class TestFinCategory(unittest.TestCase):
    """Test finite categories"""

    def setUp(self):
        self.arrow = parse_input(data_path('arrow.json'))

    def test_composition(self):
        """Identities are neutral and a composes after 1x"""
        a = self.arrow.morphism('a')
        self.assertEqual(self.arrow.compose(self.arrow.identity('x'), a), a)
        self.assertEqual(len(self.arrow.hom('x', 'y')), 1)
        self.assertEqual(self.arrow.hom('y', 'x'), ())

    def test_missing_composite(self):
        """Composable pairs must all be tabulated"""
        morphisms = [Morphism('1x', 'x', 'x'), Morphism('1y', 'y', 'y'), Morphism('a', 'x', 'y')]
        with self.assertRaises(InvariantError):
            FinCategory(['x', 'y'], morphisms, {'x': '1x', 'y': '1y'}, {('1x', '1x'): '1x'})

    def test_codiscrete(self):
        """Codiscrete categories have one morphism between any two objects"""
        C = codiscrete(['p', 'q'])
        C.validate()
        self.assertEqual(len(C.hom('p', 'q')), 1)


class TestDistributors(unittest.TestCase):
    """Test hom distributors, composition and representability"""

    def setUp(self):
        self.arrow = parse_input(data_path('arrow.json'))
        self.hom = hom_distributor(self.arrow)

    def test_hom_from_file(self):
        """The hom distributor file matches the constructor"""
        loaded = parse_input(data_path('hom-arrow.json'))
        self.assertEqual(loaded.size(), self.hom.size())
        self.assertEqual(sorted(loaded.elements()), sorted(self.hom.elements()))

    def test_hom_is_valid(self):
        """Hom distributors act functorially"""
        self.hom.validate()
        self.assertEqual(self.hom.size(), 3)

    def test_composite_of_homs(self):
        """Composing two hom distributors keeps one class per morphism"""
        composite = compose_distributors(self.hom, 0, self.hom, 0)
        composite.validate()
        self.assertEqual(composite.size(), 3)

    def test_co_yoneda(self):
        """Composing with hom gives back the distributor"""
        report = co_yoneda_check(self.hom)
        self.assertTrue(report.passed, report.failures)
        self.assertGreater(report.checked, 0)

    def test_associator(self):
        """Both bracketings of three homs are canonically in bijection"""
        report = associator_check(self.hom, 0, self.hom, 0, self.hom, 0, 0)
        self.assertTrue(report.passed, report.failures)

    def test_mismatched_boundary(self):
        """Categories at the cut must agree"""
        other = hom_distributor(discrete(['z']))
        with self.assertRaises(BoundaryMismatch):
            compose_distributors(self.hom, 0, other, 0)

    def test_hom_is_representable(self):
        """Hom distributors are representable in each variable"""
        self.assertTrue(representable_in(self.hom, SIDE_OUT, 0).holds)
        self.assertTrue(representable_in(self.hom, SIDE_IN, 0).holds)

    def test_diagonal_is_not_representable(self):
        """Two discrete labels over a nullary input have no universal element"""
        F = diagonal_functor(terminal(2))
        D = F.distributor(PolyMap('!', Boundary((), ('*',))))
        decision = representable_in(D, SIDE_OUT, 0)
        self.assertFalse(decision.holds)
        self.assertTrue(decision.evidence)

    def test_wrong_tuple_length(self):
        """Element tuples must match the boundary"""
        D = FinDistributor([self.arrow], [self.arrow], {(('x',), ()): ['e']}, {})
        with self.assertRaises(InvariantError) as ctx:
            D.validate()
        self.assertEqual(ctx.exception.check, 'tuples')


if __name__ == '__main__':
    unittest.main()
