# oracle_test.py
#
# Automated unit tests for the bar-complex H^1 oracle
#   - in particular, that it agrees with the engine on every small group and module we try
from spcgt.checks import adjoint_mod_scalars
from spcgt.cohomology.engine import h1_cohomology
from spcgt.cohomology.oracle import h1_bar_oracle, random_generating_set
from spcgt.groups.enumeration import GeneratedGroup, enumerate_group
from spcgt.linalg import AbelianGroupStructure
from spcgt.modules.lie import sp_dim
from spcgt.modules.standard import build_module, reduce_coefficients, standard_module, trivial_module
from spcgt.utils import ResourceLimitExceeded
import numpy as np
import unittest


def enumerated(g, modulus):
    return enumerate_group(GeneratedGroup.standard_group(g, modulus), use_cache=False)


class OracleTest(unittest.TestCase):
    def testAgreesWithTheEngine(self):
        cases = [
            (1, 2, ['standard', 'adjoint', 'trivial']),
            (1, 3, ['standard', 'adjoint', 'dual-of-adjoint', 'trivial']),
            (1, 4, ['standard', 'adjoint', 'trivial']),
            (1, 5, ['standard', 'adjoint']),
            (1, 6, ['standard', 'trivial']),
            (1, 9, ['standard', 'adjoint']),
            (2, 2, ['standard', 'adjoint', 'wedge3', 'dual-of-wedge3', 'wedge3-mod-omega']),
        ]
        for g, modulus, specs in cases:
            group = enumerated(g, modulus)
            for spec in specs:
                module = build_module(group, spec)
                self.assertEqual(h1_bar_oracle(group, module), h1_cohomology(group, module).h1, (g, modulus, spec))

    def testQuotientModules(self):
        for g in [1, 2]:
            group = enumerated(g, 2)
            module = adjoint_mod_scalars(group)
            self.assertEqual(sp_dim(g) - 1, module.dim)
            self.assertEqual(h1_bar_oracle(group, module), h1_cohomology(group, module).h1, g)

    def testRandomSpanningTree(self):
        group = enumerated(2, 2)
        tree = random_generating_set(group, np.random.default_rng(11))
        self.assertEqual(list(range(group.order)), sorted(tree.order))
        position = np.argsort(tree.order)
        children = tree.order[1:]
        self.assertTrue((position[tree.parent[children]] < position[children]).all())
        gens = np.asarray(tree.gens, dtype=np.int64)[tree.parent_gen[children]]
        self.assertEqual(list(children), list(group.multiply(tree.parent[children], gens)))

    def testSeedDoesNotMatter(self):
        group = enumerated(1, 9)
        module = build_module(group, 'adjoint')
        results = [h1_bar_oracle(group, module, seed=seed, samples=50) for seed in [0, 1, 2]]
        self.assertEqual([results[0]] * 3, results)

    def testReducedCoefficients(self):
        group = enumerated(1, 4)
        module = reduce_coefficients(standard_module(group), 2)
        self.assertEqual(h1_bar_oracle(group, module), h1_cohomology(group, module).h1)

    def testKnownValue(self):
        group = enumerated(1, 3)
        self.assertEqual(AbelianGroupStructure([3]), h1_bar_oracle(group, trivial_module(group, 1)))

    def testOrderCap(self):
        group = enumerated(1, 5)
        self.assertRaises(ResourceLimitExceeded, lambda: h1_bar_oracle(group, standard_module(group), oracle_cap=100))


if __name__ == '__main__':
    unittest.main()
