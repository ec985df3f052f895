"""
Unit tests for universality, duals and birepresentability
"""
import unittest

from ..constants import SIDE_OUT
from ..exceptions import IndexOutOfRange
from ..models.functor import unique_functor_to_terminal
from ..models.monoid_polycategory import MonoidPolycategory, boolean_monoid, cyclic_monoid, terminal
from ..models.polycategory import Boundary, PolyMap
from ..services.fibration_service import is_in_cartesian, is_out_cartesian
from ..services.universal_service import (
    decide_birepresentable, dual_conditions, find_left_dual, find_par, find_right_dual, find_tensor, is_in_universal,
    is_out_universal, tensor_uniqueness_check, universal_composition_check,
)
from .common import identity_corpus, small_corpus


class TestUniversality(unittest.TestCase):
    """Test unique-factorization certificates"""

    def setUp(self):
        self.bool = MonoidPolycategory(boolean_monoid(), 2, name='bool')

    def test_unit_is_universal(self):
        """Invertible labels factor every map uniquely"""
        one = PolyMap('1', Boundary(('*',), ('*',)))
        cert = is_out_universal(self.bool, one, 0)
        self.assertTrue(cert.passed)
        self.assertGreater(cert.checked_instances, 0)

    def test_absorbing_element_is_not_universal(self):
        """0 is not invertible under conjunction"""
        zero = PolyMap('0', Boundary(('*',), ('*',)))
        cert = is_in_universal(self.bool, zero, 0)
        self.assertFalse(cert.passed)
        self.assertIsNotNone(cert.failure)

    def test_index_out_of_range(self):
        """Positions must exist"""
        with self.assertRaises(IndexOutOfRange):
            is_out_universal(self.bool, PolyMap('1', Boundary(('*',), ())), 0)

    def test_universal_iff_cartesian_over_terminal(self):
        """Universality agrees with cartesianness for the functor to the terminal polycategory"""
        for P in small_corpus():
            p = unique_functor_to_terminal(P)
            for f in P.polymaps():
                if len(f.domain) + len(f.codomain) > 2:
                    continue
                for i in range(len(f.codomain)):
                    self.assertEqual(is_out_universal(P, f, i).passed, is_out_cartesian(p, f, i).passed, str(f))
                for j in range(len(f.domain)):
                    self.assertEqual(is_in_universal(P, f, j).passed, is_in_cartesian(p, f, j).passed, str(f))

    def test_universal_composites(self):
        """Composites of universal polymaps stay universal"""
        report = universal_composition_check(self.bool)
        self.assertTrue(report.passed, report.failures)
        self.assertGreater(report.checked, 0)


class TestDuals(unittest.TestCase):
    """Test dual objects"""

    def setUp(self):
        self.z2 = MonoidPolycategory(cyclic_monoid(2), 2, name='z2')

    def test_self_dual(self):
        """The single object of a monoid polycategory is its own dual"""
        found = find_right_dual(self.z2, '*')
        self.assertIsNotNone(found)
        self.assertEqual(found.object, '*')
        self.assertTrue(found.certificate.passed)

    def test_left_dual(self):
        """Left duals exist whenever right duals do in the commutative case"""
        found = find_left_dual(self.z2, '*')
        self.assertIsNotNone(found)
        self.assertEqual(found.partner.boundary, Boundary(('*', '*'), ()))

    def test_conditions_agree(self):
        """All five characterizations of a dual agree"""
        for P in small_corpus():
            conditions = dual_conditions(P, '*', '*')
            self.assertTrue(all(conditions.values()), P.name)

    def test_no_duals_without_cups(self):
        """A polycategory of identities has no duals"""
        for P in identity_corpus():
            for obj in P.objects:
                self.assertFalse(any(dual_conditions(P, obj, obj).values()))
                self.assertIsNone(find_right_dual(P, obj))


class TestBirepresentability(unittest.TestCase):
    """Test the two characterizations of birepresentability"""

    def test_monoid_corpus(self):
        """Monoid polycategories are birepresentable"""
        for P in (terminal(2), MonoidPolycategory(cyclic_monoid(2), 2, name='z2')):
            decision = decide_birepresentable(P)
            self.assertTrue(decision.holds, P.name)
            self.assertTrue(decision.agreement)

    def test_identities_are_not(self):
        """Without tensors there is no birepresentability, and both characterizations say so"""
        for P in identity_corpus():
            decision = decide_birepresentable(P)
            self.assertFalse(decision.holds)
            self.assertTrue(decision.agreement)
            self.assertEqual(decision.verdict, 'fails')
            self.assertTrue(decision.notes)

    def test_par(self):
        """Pars exist in a group and not among identities"""
        P = MonoidPolycategory(cyclic_monoid(3), 2, name='z3')
        found = find_par(P, ('*', '*'))
        self.assertIsNotNone(found)
        self.assertEqual(found.witness.boundary, Boundary(('*',), ('*', '*')))
        self.assertIsNone(find_par(identity_corpus()[0], ('A', 'A')))

    def test_tensor_uniqueness(self):
        """Tensors are unique up to a unique isomorphism"""
        P = MonoidPolycategory(cyclic_monoid(3), 2, name='z3')
        self.assertIsNotNone(find_tensor(P, ('*', '*')))
        report = tensor_uniqueness_check(P, ('*', '*'))
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.checked, 9)

    def test_side_constants(self):
        """Certificates record which side they certify"""
        P = terminal(2)
        cert = is_out_universal(P, P.identity('*'), 0)
        self.assertEqual(cert.side, SIDE_OUT)


if __name__ == '__main__':
    unittest.main()
