"""
Unit tests for polylinear maps
"""
import unittest
from fractions import Fraction

from ..exceptions import DimMismatch, PlanarityViolation
from ..models.norm import PolyLinearMap, fraction_array
from ..services.linear_service import (
    A_image, A_kernel, compose_linear, identity_map, is_A_injective, is_A_surjective, is_contractive,
    universal_map_tensors,
)
from ..services.norm_service import l1, linf, projective_unit_ball

ONE, ZERO = Fraction(1), Fraction(0)


class TestPolyLinearMaps(unittest.TestCase):
    """Test composition and the universal maps"""

    def setUp(self):
        self.m, self.w, self.cup, self.cap = universal_map_tensors([2, 2])
        self.e0, self.e1 = (ONE, ZERO), (ZERO, ONE)

    def test_m_then_w_is_identity(self):
        """Flattening then unflattening returns every basis tuple"""
        both = compose_linear(self.m, 0, self.w, 0)
        self.assertEqual(both.input_dims, (2, 2))
        self.assertEqual(both.output_dims, (2, 2))
        self.assertEqual(both.evaluate([self.e0, self.e1], [self.e0, self.e1]), ONE)
        self.assertEqual(both.evaluate([self.e0, self.e1], [self.e1, self.e0]), ZERO)

    def test_identity_is_neutral(self):
        """Composing with identities changes nothing"""
        self.assertEqual(compose_linear(identity_map(2), 0, self.m, 1), self.m)
        self.assertEqual(compose_linear(self.m, 0, identity_map(4), 0), self.m)

    def test_snake(self):
        """cup then cap on facing wires is the identity"""
        _, _, cup, cap = universal_map_tensors([2])
        snake = compose_linear(cup, 1, cap, 0)
        self.assertEqual(snake.input_dims, (2,))
        self.assertEqual(snake.output_dims, (2,))
        self.assertEqual(snake, identity_map(2))

    def test_dimension_mismatch(self):
        """Cut dimensions must agree"""
        with self.assertRaises(DimMismatch):
            compose_linear(self.m, 0, identity_map(2), 0)

    def test_planarity(self):
        """Cuts with facing contexts on one side are rejected"""
        with self.assertRaises(PlanarityViolation):
            compose_linear(self.w, 1, self.m, 1)

    def test_contractive(self):
        """m is contractive into the projective norm and w out of l1"""
        factors = [l1(2), linf(2)]
        self.assertTrue(is_contractive(self.m, factors, [projective_unit_ball(factors)]).holds)
        doubled = self.m.scaled(2)
        decision = is_contractive(doubled, factors, [projective_unit_ball(factors)])
        self.assertFalse(decision.holds)
        self.assertTrue(decision.evidence)


class TestAKernelImage(unittest.TestCase):
    """Test A-kernels and A-images"""

    def setUp(self):
        self.projection = PolyLinearMap((2,), (1,), fraction_array([1, 0], (2, 1)), name='p')
        self.m, self.w, _, _ = universal_map_tensors([2, 2])

    def test_projection_kernel(self):
        """The kernel of the first coordinate is spanned by e1"""
        kernel = A_kernel(self.projection, 0)
        self.assertEqual(len(kernel), 1)
        self.assertEqual(kernel[0][0], ZERO)
        self.assertNotEqual(kernel[0][1], ZERO)
        self.assertFalse(is_A_injective(self.projection, 0))

    def test_universal_maps(self):
        """m is A-surjective and w is A-injective"""
        self.assertTrue(is_A_surjective(self.m, 0))
        self.assertTrue(is_A_injective(self.w, 0))
        self.assertTrue(is_A_injective(self.m, 1))
        self.assertEqual(len(A_image(self.w, 1)), 2)

    def test_zero_map(self):
        """The zero map has full kernel and empty image"""
        zero = identity_map(2).scaled(0)
        self.assertEqual(len(A_kernel(zero, 0)), 2)
        self.assertEqual(A_image(zero, 0), [])
        self.assertFalse(is_A_surjective(zero, 0))


if __name__ == '__main__':
    unittest.main()
