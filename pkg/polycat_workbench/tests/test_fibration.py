"""
Unit tests for functors, cartesian polymaps and fibrations
"""
import unittest

from ..models.functor import PolyFunctor, compose_functors, identity_functor, unique_functor_to_terminal
from ..models.monoid_polycategory import MonoidPolycategory, boolean_monoid, cyclic_monoid, terminal
from ..models.polycategory import Boundary, PolyMap
from ..services.axiom_service import check_axioms
from ..services.fibration_service import (
    birep_bifib_crosscheck, cartesian_composition_check, cartesian_over_cartesian_check, check_functor,
    decide_bifibration, decide_pull_fibration, decide_push_fibration, frobenius_monoids, is_in_cartesian, polyfiber,
    pullback_exists, pushforward_exists, refinement_pullback, refinement_pullback_check,
)
from ..services.parser_factory import parse_input
from .common import data_path, identity_corpus, small_corpus


class TestFunctors(unittest.TestCase):
    """Test functor checks"""

    def setUp(self):
        self.z2 = MonoidPolycategory(cyclic_monoid(2), 2, name='z2')

    def test_functor_files(self):
        """Functors loaded from files pass the functor check"""
        for name in ('bool-to-terminal.json', 'identity-terminal.json'):
            report = check_functor(parse_input(data_path(name)))
            self.assertTrue(report.passed, report.failures)
            self.assertGreater(report.checked, 0)

    def test_constant_map_is_not_a_functor(self):
        """Sending everything to 1 breaks the identity law"""
        broken = PolyFunctor(self.z2, self.z2, {'*': '*'}, lambda f: '1', name='constant')
        report = check_functor(broken)
        self.assertFalse(report.passed)
        self.assertIn('identity', report.failures[0])

    def test_composite_functor(self):
        """Composing with the map to the terminal polycategory is a functor"""
        composite = compose_functors(unique_functor_to_terminal(self.z2), identity_functor(self.z2))
        self.assertTrue(check_functor(composite).passed)


class TestCartesian(unittest.TestCase):
    """Test cartesian polymaps and fibration decisions"""

    def setUp(self):
        self.bool = MonoidPolycategory(boolean_monoid(), 2, name='bool')
        self.p = unique_functor_to_terminal(self.bool)

    def test_cartesian_label(self):
        """Over the terminal polycategory only invertible labels are cartesian"""
        one = PolyMap('1', Boundary(('*', '*'), ('*',)))
        zero = PolyMap('0', Boundary(('*', '*'), ('*',)))
        self.assertTrue(is_in_cartesian(self.p, one, 1).passed)
        self.assertFalse(is_in_cartesian(self.p, zero, 1).passed)

    def test_lifts(self):
        """Lifts exist over the terminal polycategory, except where a hom is empty"""
        unary = PolyMap('!', Boundary(('*',), ('*',)))
        lift = pullback_exists(self.p, unary, 0, (), (), ('*',))
        self.assertIsNotNone(lift)
        self.assertEqual(lift.object, '*')
        self.assertIsNotNone(pushforward_exists(self.p, unary, 0, ('*',), (), ()))
        self.assertTrue(decide_pull_fibration(self.p).holds)
        self.assertTrue(decide_push_fibration(self.p).holds)
        q = unique_functor_to_terminal(identity_corpus()[0])
        self.assertIsNone(pushforward_exists(q, PolyMap('!', Boundary((), ('*',))), 0, (), (), ()))

    def test_bifibration(self):
        """The identity functor and the map of a birepresentable polycategory to the terminal are bifibrations"""
        self.assertTrue(decide_bifibration(identity_functor(self.bool)).holds)
        self.assertTrue(decide_bifibration(self.p).holds)

    def test_cartesian_composites(self):
        """Cartesian polymaps compose"""
        report = cartesian_composition_check(self.p)
        self.assertTrue(report.passed, report.failures)

    def test_cartesian_over_cartesian(self):
        """A cartesian polymap over a cartesian polymap is cartesian for the composite"""
        report = cartesian_over_cartesian_check(identity_functor(self.bool), self.p)
        self.assertTrue(report.passed, report.failures)
        self.assertGreater(report.checked, 0)


class TestCrossCheck(unittest.TestCase):
    """Test birepresentability against bifibrancy over the terminal polycategory"""

    def test_corpus_agreement(self):
        """Both decisions agree across the corpus"""
        for P in small_corpus()[:3] + identity_corpus():
            decision = birep_bifib_crosscheck(P)
            self.assertTrue(decision.holds, decision.evidence)
            self.assertTrue(decision.agreement)

    def test_identities_fail_both(self):
        """A polycategory of identities is neither"""
        decision = birep_bifib_crosscheck(identity_corpus()[0])
        self.assertIn('birepresentable: fails', decision.evidence)
        self.assertIn('bifibration: fails', decision.evidence)


class TestFrobenius(unittest.TestCase):
    """Test Frobenius families, polyfibers and refinement pullbacks"""

    def setUp(self):
        self.z2 = MonoidPolycategory(cyclic_monoid(2), 2, name='z2')

    def test_terminal_has_one_family(self):
        """The terminal polycategory carries exactly one family"""
        families = frobenius_monoids(terminal(2), '*')
        self.assertEqual(len(families), 1)
        self.assertTrue(check_functor(families[0].functor).passed)

    def test_families_in_z2(self):
        """The family of units is always found, and the limit is respected"""
        families = frobenius_monoids(self.z2, '*')
        self.assertGreaterEqual(len(families), 1)
        self.assertTrue(any(all(f.id == '0' for f in fm.family.values()) for fm in families))
        self.assertEqual(len(frobenius_monoids(self.z2, '*', limit=1)), 1)

    def test_polyfiber(self):
        """The polyfiber over the terminal family is a polycategory"""
        p = unique_functor_to_terminal(self.z2)
        fm = frobenius_monoids(p.target, '*')[0]
        fibre = polyfiber(p, fm)
        self.assertEqual(fibre.objects, ('*',))
        self.assertTrue(check_axioms(fibre).passed)

    def test_refinement_pullback(self):
        """Pulling back along a refinement keeps lifts"""
        p = unique_functor_to_terminal(self.z2)
        s = unique_functor_to_terminal(MonoidPolycategory(boolean_monoid(), 2, name='bool'))
        pulled = refinement_pullback(p, s)
        self.assertEqual(pulled.polycategory.objects, ('(*,*)',))
        self.assertTrue(check_functor(pulled.to_source).passed)
        report = refinement_pullback_check(p, s)
        self.assertTrue(report.passed, report.failures)


if __name__ == '__main__':
    unittest.main()
