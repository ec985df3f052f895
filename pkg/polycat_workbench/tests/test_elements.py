"""
Unit tests for lax normal functors and the polycategory of elements
"""
import unittest

from ..constants import CONSTRUCTION_FIBRES, CONSTRUCTION_TWISTED, TWIST_MONOIDS
from ..models.functor import identity_functor
from ..models.monoid_polycategory import FiniteMonoid, terminal
from ..services.elements_service import (
    build_elements, check_elements, check_lax_normal, diagonal_functor, fibres_functor, grothendieck_crosscheck,
    is_pseudo, mvar_check, presheaf_functor, random_lax_functor, roundtrip_check, roundtrip_functor_check,
    singleton_functor, twisted_functor,
)
from ..services.parser_factory import parse_input
from .common import data_path


class TestLaxNormalFunctors(unittest.TestCase):
    """Test the generators and the coherence checker"""

    def setUp(self):
        self.base = terminal(2)
        self.singleton = singleton_functor(self.base)
        self.twisted = twisted_functor(self.base, FiniteMonoid(*TWIST_MONOIDS['z2']))
        self.diagonal = diagonal_functor(self.base)

    def test_generators_are_coherent(self):
        """Singleton, twisted and diagonal functors pass every check"""
        for F in (self.singleton, self.twisted, self.diagonal):
            report = check_lax_normal(F)
            self.assertTrue(report.passed, f"{F.name}: {report.failures[:3]}")
            self.assertGreater(report.checked, 0)

    def test_mutated_laxity_fails(self):
        """Redirecting one laxity entry breaks naturality"""
        ident = self.twisted.base.identity('*')
        x = (('u',), ('u',), 'e')
        mutant = self.twisted.with_laxity((ident, 0, ident, 0), (x, x), 'a')
        report = check_lax_normal(mutant)
        self.assertFalse(report.passed)
        self.assertTrue(any('naturality' in failure for failure in report.failures))

    def test_random_functors(self):
        """Seeded random functors with fibres and element sets up to size 3 are coherent"""
        for seed in range(6):
            F = random_lax_functor(seed, max_fibre=3, max_elements=3)
            report = check_lax_normal(F)
            self.assertTrue(report.passed, f"seed {seed}: {report.failures[:3]}")

    def test_random_is_deterministic(self):
        """The same seed builds the same functor"""
        one, two = random_lax_functor(11), random_lax_functor(11)
        self.assertEqual(one.describe(), two.describe())
        self.assertEqual(one.laxity, two.laxity)

    def test_presheaf(self):
        """A presheaf on the arrow category is a lax normal functor"""
        arrow = parse_input(data_path('arrow.json'))
        F = presheaf_functor(arrow, {'x': ['p', 'q'], 'y': ['r']}, {('a', 'r'): 'p'})
        report = check_lax_normal(F)
        self.assertTrue(report.passed, report.failures[:3])

    def test_presheaf_elements_match_direct_construction(self):
        """Unary polymaps of the elements are the arrows of the classical category of elements"""
        arrow = parse_input(data_path('arrow.json'))
        sets = {'x': ['p', 'q'], 'y': ['r']}
        restrict = {('a', 'r'): 'p'}
        construction = build_elements(presheaf_functor(arrow, sets, restrict))
        direct = set()
        for m in arrow.morphisms:
            for y in sets[m.target]:
                x = y if m.source == m.target else restrict[(m.id, y)]
                direct.add((m.source, x, m.target, y, m.id))
        found = {(f.domain[0], ins[0], f.codomain[0], outs[0], f.id)
                 for f, (ins, outs, _) in construction.origin.values()}
        self.assertEqual(found, direct)

    def test_files(self):
        """Lax functor files build the named constructions"""
        twisted = parse_input(data_path('twisted-z2.json'))
        self.assertEqual(twisted.construction, CONSTRUCTION_TWISTED)
        self.assertEqual(twisted.base.arity_bound, 2)
        fibres = parse_input(data_path('fibres-bool.json'))
        self.assertEqual(fibres.construction, CONSTRUCTION_FIBRES)
        self.assertTrue(check_lax_normal(fibres).passed)


class TestElements(unittest.TestCase):
    """Test the elements construction, round trips and representability"""

    def setUp(self):
        self.base = terminal(2)
        self.twisted = twisted_functor(self.base, FiniteMonoid(*TWIST_MONOIDS['z2']))
        self.diagonal = diagonal_functor(self.base)

    def test_elements_of_twisted(self):
        """Every polymap of the base carries one polymap per monoid element"""
        construction = build_elements(self.twisted)
        report = check_elements(construction, self.twisted)
        self.assertTrue(report.passed, report.failures[:3])
        self.assertEqual(construction.polycategory.objects, ('*:u',))
        for f in self.twisted.base_polymaps():
            self.assertEqual(len(construction.over(f)), 2)

    def test_roundtrip(self):
        """Fibres of the projection recover the functor"""
        for F in (singleton_functor(self.base), self.twisted):
            report = roundtrip_check(F)
            self.assertTrue(report.passed, f"{F.name}: {report.failures[:3]}")

    def test_random_roundtrip(self):
        """Fibres of the projection recover seeded random functors"""
        for seed in range(5):
            F = random_lax_functor(seed, max_fibre=3, max_elements=3)
            report = roundtrip_check(F)
            self.assertTrue(report.passed, f"seed {seed}: {report.failures[:3]}")

    def test_functor_roundtrip(self):
        """Elements of the fibres functor recover the source polycategory"""
        for p in (parse_input(data_path('bool-to-terminal.json')), identity_functor(terminal(2))):
            report = roundtrip_functor_check(p)
            self.assertTrue(report.passed, f"{p.name}: {report.failures[:3]}")
            self.assertTrue(check_lax_normal(fibres_functor(p)).passed, p.name)

    def test_representability(self):
        """Twisted functors are representable pseudofunctors, the diagonal is not representable"""
        self.assertTrue(mvar_check(self.twisted).holds)
        self.assertTrue(is_pseudo(self.twisted).holds)
        decision = mvar_check(self.diagonal)
        self.assertFalse(decision.holds)
        self.assertIn('not representable', decision.evidence[0])

    def test_grothendieck_crosscheck(self):
        """Representability and bifibration agree on every generator"""
        for F in (singleton_functor(self.base), self.twisted, self.diagonal):
            decision = grothendieck_crosscheck(F)
            self.assertTrue(decision.agreement, decision.evidence)
            self.assertTrue(any(e.startswith('birepresentable') for e in decision.evidence))

    def test_grothendieck_crosscheck_on_random_functors(self):
        """Representability and bifibration agree on seeded random functors"""
        for seed in range(5):
            F = random_lax_functor(seed, max_fibre=3, max_elements=3)
            decision = grothendieck_crosscheck(F)
            self.assertTrue(decision.agreement, f"seed {seed}: {decision.evidence}")


if __name__ == '__main__':
    unittest.main()
