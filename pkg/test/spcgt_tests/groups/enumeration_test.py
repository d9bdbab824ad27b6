# enumeration_test.py
#
# Automated unit tests for breadth-first enumeration of Sp_2g(Z/L)
#   - in particular, the spanning tree, the Cayley table and the relators read off from it
from spcgt.groups.enumeration import GeneratedGroup, enumerate_group, evaluate_relator, level_bounds
from spcgt.groups.symplectic import predicted_order, transvection
from spcgt.linalg import ZMatrix
from spcgt.utils import InvalidArgument, ResourceLimitExceeded, StateError
import numpy as np
import unittest


def enumerated(g, modulus):
    return enumerate_group(GeneratedGroup.standard_group(g, modulus), use_cache=False)


class EnumerationTest(unittest.TestCase):
    def testOrdersMatchTheFormula(self):
        for g, modulus in [(1, 2), (1, 3), (1, 4), (1, 5), (1, 7), (1, 9), (1, 6), (2, 2)]:
            group = enumerated(g, modulus)
            self.assertEqual(predicted_order(g, modulus), group.order)

    def testIdentityComesFirst(self):
        group = enumerated(1, 5)
        self.assertTrue(group.element(0).is_identity())
        self.assertEqual(0, group.index_of(ZMatrix.identity(2, 5)))
        self.assertEqual((), group.tree_word(0))

    def testTreeWordsMultiplyOut(self):
        group = enumerated(1, 7)
        for index in [1, 5, 77, group.order - 1]:
            x = ZMatrix.identity(2, 7)
            for j in group.tree_word(index):
                x = x @ group.generators[j]
            self.assertEqual(group.element(index), x)

    def testCayleyTable(self):
        group = enumerated(1, 4)
        table = group.cayley.table
        for u in range(group.order):
            for j, s in enumerate(group.generators):
                self.assertEqual(group.index_of(group.element(u) @ s), table[u, j])

    def testMultiply(self):
        group = enumerated(1, 3)
        a = np.arange(group.order)
        b = np.full(group.order, 7)
        products = group.multiply(a, b)
        for u in [0, 3, 11]:
            self.assertEqual(group.index_of(group.element(u) @ group.element(7)), products[u])

    def testBfsOrder(self):
        group = enumerated(2, 2)
        parent = group.cayley.parent
        self.assertEqual(-1, parent[0])
        self.assertTrue(np.all(np.diff(parent[1:]) >= 0))
        self.assertTrue(np.all(parent[1:] < np.arange(1, group.order)))
        bounds = group.cayley.level_bounds
        self.assertEqual((0, 1), bounds[0])
        self.assertEqual(group.order, bounds[-1][1])
        for (_, e1), (s2, _) in zip(bounds, bounds[1:]):
            self.assertEqual(e1, s2)

    def testLevelBounds(self):
        self.assertEqual([(0, 1), (1, 3), (3, 4)], level_bounds(np.array([-1, 0, 0, 1])))

    def testRelators(self):
        group = enumerated(1, 3)
        m = group.generator_count
        self.assertEqual(group.order * m - (group.order - 1), group.cayley.relator_count)
        count = 0
        for word in group.relator_words():
            self.assertTrue(evaluate_relator(group, word).is_identity())
            count += 1
        self.assertEqual(group.cayley.relator_count, count)

    def testRelatorWordShape(self):
        group = enumerated(1, 2)
        u, j, w = group.cayley.relator_edges()
        word = group.relator_word(int(u[0]), int(j[0]))
        self.assertEqual(j[0] + 1, word[len(group.tree_word(int(u[0])))])
        self.assertTrue(all(x < 0 for x in word[len(group.tree_word(int(u[0]))) + 1:]))

    def testSubgroup(self):
        t = transvection([1, 0], 1, 5)
        group = enumerate_group(GeneratedGroup(1, 5, [t]), use_cache=False)
        self.assertEqual(5, group.order)
        self.assertIsNone(group.index_of(ZMatrix([[0, 1], [4, 0]], 5)))

    def testOrderCap(self):
        self.assertRaises(ResourceLimitExceeded, lambda: enumerate_group(GeneratedGroup.standard_group(2, 3),
                                                                         order_cap=1000, use_cache=False))

    def testNeedsCayleyData(self):
        group = GeneratedGroup.standard_group(1, 3)
        self.assertFalse(group.has_cayley)
        self.assertRaises(StateError, lambda: group.order)
        self.assertRaises(StateError, lambda: group.tree_word(1))

    def testRejectsNonSymplecticGenerators(self):
        self.assertRaises(InvalidArgument, lambda: GeneratedGroup(1, 5, [ZMatrix([[2, 0], [0, 1]], 5)]))
        self.assertRaises(InvalidArgument, lambda: GeneratedGroup(1, 5, []))


if __name__ == '__main__':
    unittest.main()
