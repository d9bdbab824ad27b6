# standard_test.py
#
# Automated unit tests for the concrete modules
#   - in particular, that every constructed action respects the relators of the group
from spcgt.groups.enumeration import GeneratedGroup, enumerate_group
from spcgt.linalg import AbelianGroupStructure, ZMatrix
from spcgt.modules.module import action_of, element_actions, satisfies_relators, LinearModule
from spcgt.modules.standard import adjoint_module, are_isomorphic, build_module, check_module_spec, crt_components, \
    dual_module, exterior_cube, module_homomorphisms, omega_embedding, quotient_module, reduce_coefficients, \
    standard_module, trivial_module, wedge3_mod_omega
from spcgt.utils import InvalidArgument
from math import comb
import unittest

_groups = {}


def enumerated(g, modulus):
    if (g, modulus) not in _groups:
        _groups[(g, modulus)] = enumerate_group(GeneratedGroup.standard_group(g, modulus), use_cache=False)
    return _groups[(g, modulus)]


class ModuleConstructionTest(unittest.TestCase):
    def testDimensions(self):
        group = GeneratedGroup.standard_group(2, 3)
        self.assertEqual(4, standard_module(group).dim)
        self.assertEqual(10, adjoint_module(group).dim)
        self.assertEqual(4, exterior_cube(standard_module(group)).dim)
        self.assertEqual(comb(6, 3), exterior_cube(standard_module(GeneratedGroup.standard_group(3, 2))).dim)
        self.assertEqual(2, trivial_module(group, 2).dim)

    def testRelatorsHold(self):
        for g, modulus, spec in [(1, 3, 'standard'), (1, 4, 'adjoint'), (1, 5, 'dual-of-adjoint'),
                                 (2, 2, 'wedge3'), (2, 2, 'wedge3-mod-omega'), (1, 6, 'adjoint')]:
            group = enumerated(g, modulus)
            self.assertTrue(satisfies_relators(group, build_module(group, spec)), (g, modulus, spec))

    def testBrokenActionIsCaught(self):
        # Transvections generate SL_2(Z/3), so killing one of them cannot extend to the others.
        group = enumerated(1, 3)
        good = standard_module(group)
        broken = LinearModule(2, 3, [ZMatrix.identity(2, 3)] + list(good.action[1:]), label='broken')
        self.assertFalse(satisfies_relators(group, broken))

    def testElementActions(self):
        group = enumerated(1, 5)
        module = adjoint_module(group)
        rho = element_actions(group, module)
        self.assertEqual((group.order, 3, 3), rho.shape)
        for index in [0, 1, 17, group.order - 1]:
            self.assertEqual(action_of(group, module, index), ZMatrix.from_array(rho[index], 5))
        self.assertTrue(action_of(group, module, 0).is_identity())

    def testDual(self):
        group = GeneratedGroup.standard_group(2, 4)
        module = adjoint_module(group)
        dual = dual_module(module)
        self.assertEqual('dual(adjoint)', dual.label)
        back = dual_module(dual)
        self.assertEqual('adjoint', back.label)
        self.assertEqual(module.action, back.action)
        for a, b in zip(module.action, dual.action):
            self.assertTrue((a.T @ b).is_identity())

    def testRejectsBadActions(self):
        self.assertRaises(InvalidArgument, lambda: LinearModule(2, 3, [ZMatrix([[1, 0], [0, 0]], 3)]))
        self.assertRaises(InvalidArgument, lambda: LinearModule(2, 3, [ZMatrix.identity(3, 3)]))
        odd = trivial_module(GeneratedGroup.standard_group(1, 3), 3)
        self.assertRaises(InvalidArgument, lambda: exterior_cube(odd))
        group = GeneratedGroup.standard_group(1, 3)
        other = standard_module(GeneratedGroup.standard_group(2, 3))
        self.assertRaises(InvalidArgument, lambda: other.check_group(group))


class OmegaEmbeddingTest(unittest.TestCase):
    def testShape(self):
        for g in [2, 3, 4]:
            emb = omega_embedding(g, 0)
            self.assertEqual((comb(2 * g, 3), 2 * g), emb.shape)
            a = emb.array
            for k in range(2 * g):
                column = [int(x) for x in a[:, k] if x]
                self.assertEqual(g - 1, len(column))
                self.assertTrue(all(x in (1, -1) for x in column))
            for row in a:
                self.assertLessEqual(sum(1 for x in row if x), 1)

    def testEquivariance(self):
        for g, modulus in [(2, 3), (3, 2), (3, 5)]:
            group = GeneratedGroup.standard_group(g, modulus)
            emb = omega_embedding(g, modulus)
            cube = exterior_cube(standard_module(group))
            for x, c in zip(group.generators, cube.action):
                self.assertEqual(emb @ x, c @ emb)

    def testNeedsGenusTwo(self):
        self.assertRaises(InvalidArgument, lambda: omega_embedding(1, 3))

    def testWedge3ModOmega(self):
        for g, modulus in [(2, 2), (2, 3), (3, 4)]:
            result = wedge3_mod_omega(GeneratedGroup.standard_group(g, modulus))
            self.assertEqual(comb(2 * g, 3) - 2 * g, result.module.dim)
            self.assertEqual(AbelianGroupStructure([modulus] * (comb(2 * g, 3) - 2 * g)), result.structure)
            self.assertEqual((result.module.dim, comb(2 * g, 3)), result.projection.shape)


class QuotientTest(unittest.TestCase):
    def testUnstableSubmodule(self):
        group = GeneratedGroup.standard_group(1, 3)
        self.assertRaises(InvalidArgument, lambda: quotient_module(standard_module(group), [[1, 0]]))

    def testNonFreeQuotient(self):
        group = GeneratedGroup.standard_group(1, 4)
        result = quotient_module(standard_module(group), [[2, 0], [0, 2]])
        self.assertIsNone(result.module)
        self.assertEqual(AbelianGroupStructure([2, 2]), result.structure)

    def testQuotientByEverything(self):
        group = GeneratedGroup.standard_group(1, 5)
        result = quotient_module(standard_module(group), [[1, 0], [0, 1]])
        self.assertEqual(0, result.module.dim)
        self.assertTrue(result.structure.is_trivial)


class CoefficientTest(unittest.TestCase):
    def testReduceCoefficients(self):
        group = enumerated(1, 9)
        reduced = reduce_coefficients(adjoint_module(group), 3)
        self.assertEqual(3, reduced.modulus)
        self.assertEqual('adjoint mod 3', reduced.label)
        self.assertTrue(satisfies_relators(group, reduced))
        self.assertRaises(InvalidArgument, lambda: reduce_coefficients(adjoint_module(group), 2))

    def testCrtComponents(self):
        group = GeneratedGroup.standard_group(1, 12)
        parts = crt_components(standard_module(group))
        self.assertEqual([(2, 2, 4), (3, 1, 3)], [(p, k, m.modulus) for p, k, m in parts])


class HomomorphismTest(unittest.TestCase):
    def testEndomorphismsOfTheStandardModule(self):
        group = GeneratedGroup.standard_group(1, 3)
        homs = module_homomorphisms(standard_module(group), standard_module(group))
        self.assertEqual(1, len(homs))
        self.assertTrue(homs[0][0, 1] == 0 and homs[0][1, 0] == 0 and homs[0][0, 0] == homs[0][1, 1])

    def testAdjointIsSelfDualForOddPrimes(self):
        for g, p in [(1, 3), (1, 5), (2, 3)]:
            module = adjoint_module(GeneratedGroup.standard_group(g, p))
            self.assertTrue(are_isomorphic(module, dual_module(module)))

    def testNotIsomorphic(self):
        group = GeneratedGroup.standard_group(1, 3)
        self.assertFalse(are_isomorphic(standard_module(group), trivial_module(group, 2)))
        self.assertFalse(are_isomorphic(standard_module(group), adjoint_module(group)))
        self.assertRaises(InvalidArgument, lambda: are_isomorphic(standard_module(GeneratedGroup.standard_group(1, 4)),
                                                                  standard_module(GeneratedGroup.standard_group(1, 4))))


class ModuleSpecTest(unittest.TestCase):
    def testSpecs(self):
        group = GeneratedGroup.standard_group(2, 2)
        self.assertEqual('standard', build_module(group, 'dual-of-dual-of-standard').label)
        self.assertEqual('dual(adjoint)', build_module(group, 'dual-of-adjoint').label)
        self.assertEqual(1, build_module(group, 'trivial').dim)
        self.assertEqual('wedge3-mod-omega', build_module(group, 'wedge3-mod-omega').label)

    def testUnknownSpecs(self):
        self.assertRaises(InvalidArgument, lambda: check_module_spec('bogus'))
        self.assertRaises(InvalidArgument, lambda: check_module_spec('dual-of-'))
        self.assertEqual('dual-of-wedge3', check_module_spec('dual-of-wedge3'))


if __name__ == '__main__':
    unittest.main()
