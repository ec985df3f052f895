"""
Unit tests for the exact norm engine
"""
import random
import unittest
from fractions import Fraction
from itertools import combinations, product

from hypothesis import given, settings, strategies as st

from ..exceptions import DimMismatch, DimTooLarge, NotSpanning
from ..models.norm import TensorElement
from ..services.linear_service import identity_map, is_contractive, universal_map_tensors
from ..services.norm_service import (
    crossnorm_contractive_equivalence, dual_norm_eval, dual_of, extremality_check, factorization_check, gauge,
    gauge_extended, injective_norm, injective_unit_ball, is_crossnorm, l1, linf, norm_from_vertices,
    norm_makes_contractive, norm_value, polar_vertices, projective_norm, projective_unit_ball, pullback_norm,
    pushforward_norm, random_tensor, random_vector, scaled, weighted_l1, weighted_linf,
)
from ..services.parser_factory import parse_input
from .common import data_path

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


class TestGauge(unittest.TestCase):
    """Test gauges, polars and dual evaluation"""

    def setUp(self):
        self.hexagon = parse_input(data_path('hexagon.json'))

    def test_l1_gauge(self):
        """The gauge of the cross-polytope is the sum of absolute values"""
        self.assertEqual(gauge(l1(2).vertices, [Fraction(3), Fraction(-1, 2)]), Fraction(7, 2))

    def test_weighted_and_dual(self):
        """Weighted norms and the dual norm are gauges of the expected polytopes"""
        x = [Fraction(1), Fraction(1)]
        self.assertEqual(gauge(weighted_l1([2, 1]).vertices, x), Fraction(3))
        self.assertEqual(gauge(weighted_linf([2, 1]).vertices, x), Fraction(2))
        covector = [Fraction(1), Fraction(2)]
        self.assertEqual(gauge(dual_of(self.hexagon).vertices, covector), dual_norm_eval(self.hexagon, covector))

    @settings(derandomize=True, max_examples=40, deadline=None)
    @given(st.lists(rationals, min_size=3, max_size=3))
    def test_lp_matches_facets(self, x):
        """The simplex gauge equals the max over the polar's vertices"""
        norm = l1(3)
        self.assertEqual(gauge(norm.vertices, x), sum(abs(c) for c in x))
        self.assertEqual(norm_value(norm, x), sum(abs(c) for c in x))

    @settings(derandomize=True, max_examples=40, deadline=None)
    @given(st.lists(rationals, min_size=2, max_size=2))
    def test_hexagon_gauge_matches_dual(self, x):
        """Gauge of a non-box polygon agrees with its facet description"""
        self.assertEqual(gauge(self.hexagon.vertices, x), norm_value(self.hexagon, x).value)

    def test_polar_of_square(self):
        """The polar of the l1 ball is the l-infinity ball"""
        self.assertEqual(set(polar_vertices(l1(2).vertices, 2)), set(linf(2).vertices))

    def test_dual_norm(self):
        """The dual of l1 evaluates as l-infinity"""
        self.assertEqual(dual_norm_eval(l1(2), [Fraction(2), Fraction(-5)]), Fraction(5))

    def test_not_spanning(self):
        """A flat vertex set has no finite gauge everywhere"""
        flat = [(Fraction(1), Fraction(0)), (Fraction(-1), Fraction(0))]
        with self.assertRaises(NotSpanning):
            gauge(flat, [Fraction(0), Fraction(1)])
        self.assertTrue(gauge_extended(flat, [Fraction(0), Fraction(1)]).is_infinite)
        self.assertEqual(gauge_extended(flat, [Fraction(2), Fraction(0)]), 2)

    def test_dimension_caps(self):
        """Polars above the configured dimension are refused"""
        with self.assertRaises(DimTooLarge):
            polar_vertices(l1(5).vertices, 5)

    def test_dim_mismatch(self):
        """Vectors must match the norm dimension"""
        with self.assertRaises(DimMismatch):
            norm_value(l1(2), [Fraction(1)])


def _solve(columns, target):
    """Exact solution of sum c_k * columns[k] = target, or None when singular"""
    n = len(target)
    rows = [[Fraction(col[r]) for col in columns] + [Fraction(target[r])] for r in range(n)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if pivot is None:
            return None
        rows[c], rows[pivot] = rows[pivot], rows[c]
        for r in range(n):
            if r != c and rows[r][c] != 0:
                factor = rows[r][c] / rows[c][c]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[c])]
    return [rows[r][n] / rows[r][r] for r in range(n)]


def brute_projective(u, norms):
    """Least nonnegative weight over every basic decomposition into vertex tensors"""
    columns = sorted({TensorElement.elementary([v, w]).flat() for v in norms[0].vertices for w in norms[1].vertices})
    target = u.flat()
    best = None
    for support in combinations(columns, len(target)):
        weights = _solve(support, target)
        if weights is None or any(w < 0 for w in weights):
            continue
        total = sum(weights)
        best = total if best is None else min(best, total)
    return best


class TestTensorNorms(unittest.TestCase):
    """Test projective and injective norms and crossnorms"""

    def setUp(self):
        self.factors = [l1(2), l1(2)]
        self.proj = projective_unit_ball(self.factors)
        self.inj = injective_unit_ball(self.factors)
        rng = random.Random(11)
        self.tensors = [random_tensor(rng, (2, 2)) for _ in range(6)]

    def test_diagonal_tensor(self):
        """u = e0 x e0 + e1 x e1 has projective norm 2 under l1, l1"""
        u = parse_input(data_path('u.json'))
        self.assertEqual(projective_norm(u, self.factors), Fraction(2))
        self.assertEqual(injective_norm(u, self.factors), Fraction(2))

    def test_elementary_tensors(self):
        """Both norms are multiplicative on elementary tensors"""
        a, b = (Fraction(1), Fraction(-2)), (Fraction(1, 2), Fraction(1, 3))
        u = TensorElement.elementary([a, b])
        expected = Fraction(3) * Fraction(1, 2)
        self.assertEqual(projective_norm(u, [l1(2), linf(2)]), expected)
        self.assertEqual(injective_norm(u, [l1(2), linf(2)]), expected)

    def test_vertex_tensors_have_norm_one(self):
        """Elementary tensors of factor vertices have projective and injective norm exactly 1"""
        for norms in ([l1(2), linf(3)], [linf(2), l1(2), linf(2)]):
            for vectors in product(*[n.vertices for n in norms]):
                u = TensorElement.elementary(vectors)
                self.assertEqual(projective_norm(u, norms), Fraction(1))
                self.assertEqual(injective_norm(u, norms), Fraction(1))

    def test_injective_below_projective(self):
        """injective <= projective on seeded tensors of order 2 and 3 over l1 and linf factors"""
        rng = random.Random(7)
        shapes = [(2, 2), (2, 3), (3, 2), (3, 3), (2, 2, 2), (2, 2, 3)]
        for k in range(102):
            dims = shapes[k % len(shapes)]
            norms = [rng.choice((l1, linf))(d) for d in dims]
            u = random_tensor(rng, dims)
            self.assertLessEqual(injective_norm(u, norms), projective_norm(u, norms), dims)

    def test_projective_against_enumeration(self):
        """The projective norm matches the best basic decomposition into vertex tensors"""
        rng = random.Random(13)
        for _ in range(50):
            u = random_tensor(rng, (2, 2))
            self.assertEqual(projective_norm(u, self.factors), brute_projective(u, self.factors))

    def test_extremality(self):
        """Every crossnorm lies between the injective and projective norms"""
        for candidate in (self.proj, self.inj):
            report = extremality_check(candidate, self.factors, self.tensors)
            self.assertTrue(report.passed, report.failures)
            self.assertEqual(report.checked, len(self.tensors))

    def test_crossnorm_decisions(self):
        """Projective and injective are crossnorms, rescaled versions are not"""
        self.assertTrue(is_crossnorm(self.proj, self.factors).holds)
        self.assertTrue(is_crossnorm(self.inj, self.factors).holds)
        self.assertFalse(is_crossnorm(scaled(self.proj, 2), self.factors).holds)
        self.assertFalse(is_crossnorm(scaled(self.inj, Fraction(1, 2)), self.factors).holds)

    def test_crossnorm_iff_contractive(self):
        """Crossnorm conditions agree with contractivity of m and w"""
        for candidate in (self.proj, self.inj):
            decision = crossnorm_contractive_equivalence(candidate, self.factors)
            self.assertTrue(decision.holds, decision.evidence)
            self.assertTrue(decision.agreement)
            self.assertEqual(decision.witness, (None, None))

    def test_crossnorm_witnesses_match_contractivity(self):
        """Rescaled norms fail both sides with the same witness tuples"""
        m, w, _, _ = universal_map_tensors([2, 2])
        for candidate in (scaled(self.proj, 2), scaled(self.inj, Fraction(1, 2))):
            decision = crossnorm_contractive_equivalence(candidate, self.factors)
            self.assertTrue(decision.agreement, decision.evidence)
            self.assertIn('crossnorm: fails', decision.evidence)
            witness1, witness2 = decision.witness
            self.assertFalse(witness1 is None and witness2 is None)
            if witness1 is not None:
                self.assertEqual(witness1, is_contractive(m, self.factors, [candidate]).witness[0])
            if witness2 is not None:
                self.assertEqual(witness2, is_contractive(w, [candidate], self.factors).witness[1])


class TestPullbackPushforward(unittest.TestCase):
    """Test norms transported along polylinear maps"""

    def setUp(self):
        self.factors = [l1(2), linf(2)]
        self.m, self.w, _, _ = universal_map_tensors([2, 2])
        _, _, _, self.cap = universal_map_tensors([2])
        self.hexagon = parse_input(data_path('hexagon.json'))
        self.rng = random.Random(5)
        self.cases = [(self.factors, (2, 2)), ([linf(2), l1(3)], (2, 3))]

    def test_pushforward_along_m_is_projective(self):
        """Pushing the factor norms along m gives the projective norm"""
        for factors, dims in self.cases:
            m, _, _, _ = universal_map_tensors(dims)
            result = pushforward_norm(m, 0, factors, [])
            self.assertTrue(result.is_norm)
            for _ in range(100):
                u = random_tensor(self.rng, dims)
                self.assertEqual(norm_value(result, u.flat()), projective_norm(u, factors))

    def test_pullback_along_w_is_injective(self):
        """Pulling the factor norms back along w gives the injective norm"""
        for factors, dims in self.cases:
            _, w, _, _ = universal_map_tensors(dims)
            result = pullback_norm(w, 0, [], factors)
            self.assertTrue(result.is_norm)
            for _ in range(100):
                u = random_tensor(self.rng, dims)
                self.assertEqual(norm_value(result, u.flat()), injective_norm(u, factors))

    def test_pullback_along_cap_is_dual(self):
        """Pulling back along the pairing gives the dual norm"""
        _, _, _, cap3 = universal_map_tensors([3])
        for cap, norm in ((self.cap, self.hexagon), (self.cap, linf(2)), (cap3, l1(3))):
            result = pullback_norm(cap, 0, [norm], [])
            for _ in range(50):
                phi = random_vector(self.rng, norm.dim)
                self.assertEqual(norm_value(result, phi), dual_norm_eval(norm, phi))

    def test_pushforward_along_identity(self):
        """The identity transports a norm unchanged"""
        result = pushforward_norm(identity_map(2), 0, [self.hexagon], [])
        self.assertEqual(set(result.vertices), set(self.hexagon.vertices))

    def test_result_is_contractive(self):
        """The transported norm makes the map contractive"""
        push = pushforward_norm(self.m, 0, self.factors, [])
        self.assertTrue(norm_makes_contractive('push', self.m, 0, self.factors, push).holds)
        pull = pullback_norm(self.w, 0, [], self.factors)
        self.assertTrue(norm_makes_contractive('pull', self.w, 0, self.factors, pull).holds)

    def test_contractivity_above_dimension_cap(self):
        """A norm whose unit ball was not reconstructed is refused as too large"""
        factors = [l1(2), l1(3)]
        m, _, _, _ = universal_map_tensors([2, 3])
        push = pushforward_norm(m, 0, factors, [])
        self.assertTrue(push.is_norm)
        self.assertIsNone(push.norm)
        with self.assertRaises(DimTooLarge):
            norm_makes_contractive('push', m, 0, factors, push)

    def test_seminorm_and_extended(self):
        """Degenerate maps give a seminorm or an extended norm"""
        zero = identity_map(2).scaled(0)
        self.assertEqual(pullback_norm(zero, 0, [], [l1(2)]).kind, 'seminorm')
        self.assertEqual(pushforward_norm(zero, 0, [l1(2)], []).kind, 'extended')

    def test_factorization(self):
        """Contractive maps factor contractively through the universal norms"""
        for kind in ('m', 'w'):
            report = factorization_check(kind, self.factors, l1(2), samples=3, seed=7)
            self.assertTrue(report.passed, report.failures)
        report = factorization_check('identity', [self.hexagon], l1(2), samples=3, seed=7)
        self.assertTrue(report.passed, report.failures)

    def test_norm_from_vertices_drops_interior_points(self):
        """Only extreme points survive"""
        points = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)), (Fraction(1, 2), Fraction(1, 4))]
        self.assertEqual(set(norm_from_vertices(points, 2).vertices), set(l1(2).vertices))


if __name__ == '__main__':
    unittest.main()
