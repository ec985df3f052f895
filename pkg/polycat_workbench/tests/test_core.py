"""
Unit tests for composition and the law checker
"""
import unittest

from hypothesis import given, settings, strategies as st

from ..constants import LAW_ASSOCIATIVITY, LAW_RIGHT_UNIT, LAWS
from ..exceptions import (
    IndexOutOfRange, InvariantError, NotAMonoid, NotCommutative, PlanarityViolation, PolycatError, TypeMismatch,
)
from ..models.monoid_polycategory import FiniteMonoid, MonoidPolycategory, cyclic_monoid, from_monoid, terminal
from ..models.polycategory import Boundary, CompositionRequest, PolyMap, plan_composition, try_plan
from ..models.table_polycategory import materialize
from ..services.axiom_service import check_axioms, compose
from ..services.parser_factory import parse_input
from .common import data_path, small_corpus


class TestCompositionBoundary(unittest.TestCase):
    """Test the planar cut rule"""

    def setUp(self):
        self.f = Boundary(('A',), ('B', 'C'))
        self.g = Boundary(('C', 'D'), ('E',))

    def test_composite_boundary(self):
        """Cutting output 1 into input 0 splices the lists in place"""
        self.assertEqual(plan_composition(self.f, 1, self.g, 0), Boundary(('A', 'D'), ('B', 'E')))

    def test_type_mismatch(self):
        """Objects at the cut must agree"""
        with self.assertRaises(TypeMismatch):
            plan_composition(self.f, 0, self.g, 0)

    def test_index_out_of_range(self):
        """Cut positions must exist"""
        with self.assertRaises(IndexOutOfRange):
            plan_composition(self.f, 2, self.g, 0)

    def test_planarity_violation_names_side(self):
        """Facing nonempty contexts on the right are rejected"""
        f = Boundary(('A',), ('C', 'B'))
        with self.assertRaises(PlanarityViolation) as ctx:
            plan_composition(f, 0, self.g, 0)
        self.assertEqual(ctx.exception.sides, ('right',))

    def test_try_plan_returns_none(self):
        """Rejected cuts give None instead of raising"""
        self.assertIsNone(try_plan(self.f, 0, self.g, 0))
        self.assertIsNone(try_plan(self.f, 5, self.g, 0))

    @settings(derandomize=True, max_examples=200)
    @given(st.lists(st.sampled_from('AB'), max_size=3), st.lists(st.sampled_from('AB'), min_size=1, max_size=3),
           st.lists(st.sampled_from('AB'), min_size=1, max_size=3), st.lists(st.sampled_from('AB'), max_size=3),
           st.integers(0, 2), st.integers(0, 2))
    def test_planarity_sweep(self, fd, fc, gd, gc, i, j):
        """A cut is accepted exactly when indices exist, types agree and facing contexts are not both nonempty"""
        fb, gb = Boundary(tuple(fd), tuple(fc)), Boundary(tuple(gd), tuple(gc))
        valid = i < len(fc) and j < len(gd)
        planar = valid and not ((i > 0 and j > 0) or (i < len(fc) - 1 and j < len(gd) - 1))
        accepted = planar and fc[i] == gd[j]
        self.assertEqual(try_plan(fb, i, gb, j) is not None, accepted)


class TestMonoidPolycategory(unittest.TestCase):
    """Test monoid presentations"""

    def setUp(self):
        self.z3 = MonoidPolycategory(cyclic_monoid(3), 3, name='z3')

    def test_composition_multiplies(self):
        """Composites carry the product of their labels"""
        f = PolyMap('1', Boundary(('*',), ('*', '*')))
        g = PolyMap('2', Boundary(('*',), ()))
        result = compose(self.z3, CompositionRequest(f, 0, g, 0))
        self.assertEqual(result, PolyMap('0', Boundary(('*',), ('*',))))

    def test_compose_rejects_foreign_polymap(self):
        """compose refuses polymaps outside the presentation"""
        f = PolyMap('7', Boundary(('*',), ('*',)))
        with self.assertRaises(PolycatError):
            compose(self.z3, CompositionRequest(f, 0, self.z3.identity('*'), 0))

    def test_noncommutative_table_rejected(self):
        """A left-zero band is a monoid only after adjoining a unit, and it does not commute"""
        with self.assertRaises(NotCommutative):
            parse_input(data_path('noncommutative.json'))

    def test_bad_unit_rejected(self):
        """A unit outside the carrier is reported"""
        with self.assertRaises(NotAMonoid):
            FiniteMonoid(('a',), 'b', {('a', 'a'): 'a'}).validate()

    def test_nonpositive_bound(self):
        """Arity bounds must be positive"""
        with self.assertRaises(InvariantError):
            from_monoid(['e'], 'e', {('e', 'e'): 'e'}, arity_bound=0)


class TestAxiomChecker(unittest.TestCase):
    """Test the exhaustive law checker"""

    def setUp(self):
        self.corpus = small_corpus() + [terminal(4)]

    def test_laws_hold_on_corpus(self):
        """Every law holds on the monoid presentations"""
        for P in self.corpus:
            report = check_axioms(P)
            self.assertTrue(report.passed, P.name)
            self.assertTrue(all(report.instances[law] > 0 for law in LAWS), P.name)

    def test_exhaustive_enumeration_agrees(self):
        """Enumerating instances gives the same verdict as the monoid shortcut"""
        for P in (terminal(2), MonoidPolycategory(cyclic_monoid(2), 2, name='z2')):
            report = check_axioms(P, exhaustive=True)
            self.assertTrue(report.passed, P.name)
            self.assertFalse(report.bound_relative)

    def test_product_monoid(self):
        """z2 x z2 satisfies every law"""
        monoid = cyclic_monoid(2).product(cyclic_monoid(2))
        report = check_axioms(MonoidPolycategory(monoid, 2, name='z2xz2'))
        self.assertTrue(report.passed)

    def test_materialized_germ_is_bound_relative(self):
        """Tabulating keeps the laws and marks the result bound-relative"""
        germ = materialize(MonoidPolycategory(cyclic_monoid(2), 2, name='z2'))
        report = check_axioms(germ)
        self.assertTrue(report.passed)
        self.assertTrue(report.bound_relative)

    def test_materialized_germ_is_closed(self):
        """Tabulated germs hold every in-bound composite of their own polymaps"""
        for P in small_corpus():
            materialize(P).validate()

    def test_mutated_table_fails(self):
        """Redirecting one composite breaks associativity"""
        germ = materialize(MonoidPolycategory(cyclic_monoid(3), 1, name='z3'))
        one = PolyMap('1', Boundary(('*',), ('*',)))
        mutant = germ.with_composition({(one, 0, one, 0): PolyMap('0', one.boundary)})
        report = check_axioms(mutant)
        self.assertFalse(report.passed)
        self.assertIn(LAW_ASSOCIATIVITY, report.failing_laws())

    def test_corrupted_file_reports_right_unit(self):
        """The corrupted germ passes validation but fails a unit law"""
        P = parse_input(data_path('corrupted.json'))
        report = check_axioms(P)
        self.assertFalse(report.passed)
        self.assertIn(LAW_RIGHT_UNIT, report.failing_laws())
        self.assertTrue(any('right-unit fails' in line for line in report.evidence()))

    def test_z2_germ_file_passes(self):
        """The uncorrupted germ satisfies every law"""
        self.assertTrue(check_axioms(parse_input(data_path('z2-germ.json'))).passed)


if __name__ == '__main__':
    unittest.main()
