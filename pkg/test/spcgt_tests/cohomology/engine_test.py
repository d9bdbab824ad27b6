# engine_test.py
#
# Automated unit tests for the twisted H^1 engine
#   - in particular, values that are known in closed form, and that the answer does not depend on
#     how much of the group the first pass looks at
from spcgt.cohomology.engine import check_cocycle_law, extend_cocycle, h1_cohomology, h1_homology, \
    verify_cocycle_space
from spcgt.constants import SPCGT_FULL_TESTS_ENV
from spcgt.groups.enumeration import GeneratedGroup, enumerate_group
from spcgt.linalg import AbelianGroupStructure
from spcgt.modules.standard import adjoint_module, build_module, standard_module, trivial_module
from spcgt.utils import InvalidArgument, StateError, env_flag
import numpy as np
import unittest

_groups = {}


def enumerated(g, modulus):
    if (g, modulus) not in _groups:
        _groups[(g, modulus)] = enumerate_group(GeneratedGroup.standard_group(g, modulus), use_cache=False)
    return _groups[(g, modulus)]


class TrivialCoefficientsTest(unittest.TestCase):
    # With trivial coefficients H^1(G; Z/L) = Hom(G, Z/L).

    def testSL2OfF3(self):
        group = enumerated(1, 3)
        space = h1_cohomology(group, trivial_module(group, 1))
        self.assertEqual(AbelianGroupStructure([3]), space.h1)
        self.assertEqual(0, space.dim_B1)
        self.assertEqual(1, space.dim_Z1)
        self.assertEqual(3, space.z1_order)

    def testPerfectGroup(self):
        group = enumerated(1, 5)
        self.assertTrue(h1_cohomology(group, trivial_module(group, 1)).h1.is_trivial)

    def testCompositeLevel(self):
        # SL_2(Z/6) = SL_2(F_2) x SL_2(F_3) has abelianization Z/2 + Z/3.
        group = enumerated(1, 6)
        self.assertEqual(AbelianGroupStructure([6]), h1_cohomology(group, trivial_module(group, 1)).h1)

    def testHomology(self):
        group = enumerated(1, 3)
        self.assertEqual(AbelianGroupStructure([3]), h1_homology(group, trivial_module(group, 1)))
        self.assertEqual(AbelianGroupStructure([3, 3]), h1_homology(group, trivial_module(group, 2)))


class TwistedCoefficientsTest(unittest.TestCase):
    def testCentralInvolutionKillsOddStandard(self):
        # -I is central and acts by -1, so everything vanishes once 2 is invertible.
        for g, modulus in [(1, 3), (1, 5), (1, 9)]:
            group = enumerated(g, modulus)
            space = h1_cohomology(group, standard_module(group))
            self.assertTrue(space.h1.is_trivial, (g, modulus))
            self.assertEqual(space.z1_order, space.b1_order)
            self.assertEqual(4 if modulus == 9 else 2, space.dim_B1)

    def testSp4OfF2Standard(self):
        group = enumerated(2, 2)
        space = h1_cohomology(group, standard_module(group))
        self.assertEqual(AbelianGroupStructure([2]), space.h1)
        self.assertEqual(4, space.dim_B1)
        self.assertEqual(5, space.dim_Z1)

    def testSmallJacobianBudget(self):
        for g, modulus, spec in [(1, 4, 'adjoint'), (1, 6, 'standard'), (2, 2, 'standard'), (1, 5, 'adjoint')]:
            group = enumerated(g, modulus)
            module = build_module(group, spec)
            full = h1_cohomology(group, module)
            small = h1_cohomology(group, module, jacobian_budget=7)
            self.assertEqual(full.h1, small.h1, (g, modulus, spec))
            self.assertEqual(full.z1_order, small.z1_order)

    def testJson(self):
        group = enumerated(1, 3)
        data = h1_cohomology(group, trivial_module(group, 1)).to_json()
        self.assertEqual({'b1_order': 1, 'dim_B1': 0, 'dim_Z1': 1, 'z1_order': 3,
                          'h1': {'free_rank': 0, 'invariant_factors': [3], 'symbol': 'Z/3'}}, data)

    def testNeedsCayleyData(self):
        group = GeneratedGroup.standard_group(1, 3)
        self.assertRaises(StateError, lambda: h1_cohomology(group, standard_module(group)))
        enumerated_group = enumerated(1, 3)
        self.assertRaises(InvalidArgument, lambda: h1_cohomology(enumerated_group, standard_module(group), 0))


class CocycleLawTest(unittest.TestCase):
    def testBasisCocyclesSatisfyTheLaw(self):
        for g, modulus, spec in [(1, 4, 'standard'), (1, 6, 'adjoint'), (2, 2, 'standard')]:
            group = enumerated(g, modulus)
            module = build_module(group, spec)
            space = h1_cohomology(group, module)
            self.assertEqual(0, verify_cocycle_space(group, module, space, 40, 11), (g, modulus, spec))

    def testRandomFunctionFails(self):
        group = enumerated(1, 3)
        module = standard_module(group)
        f = np.random.default_rng(3).integers(0, 3, size=(group.order, 2))
        self.assertGreater(check_cocycle_law(group, module, f, 50, 5), 0)

    def testExtensionStartsAtZero(self):
        group = enumerated(1, 5)
        module = adjoint_module(group)
        f = extend_cocycle(group, module, [1] * (module.generator_count * module.dim))
        self.assertEqual((group.order, 3), f.shape)
        self.assertFalse(np.any(f[0]))

    def testExtensionChecksLength(self):
        group = enumerated(1, 5)
        self.assertRaises(InvalidArgument, lambda: extend_cocycle(group, standard_module(group), [1, 2, 3]))


@unittest.skipUnless(env_flag(SPCGT_FULL_TESTS_ENV), 'set %s=1 to run the slow cases' % SPCGT_FULL_TESTS_ENV)
class FullSizeTest(unittest.TestCase):
    def testSp6OfF2Adjoint(self):
        group = enumerated(3, 2)
        module = adjoint_module(group)
        self.assertEqual(AbelianGroupStructure([2]), h1_cohomology(group, module).h1)
        self.assertTrue(h1_homology(group, module).is_trivial)

    def testSp4OfF3Standard(self):
        group = enumerated(2, 3)
        self.assertTrue(h1_cohomology(group, standard_module(group)).h1.is_trivial)


if __name__ == '__main__':
    unittest.main()
