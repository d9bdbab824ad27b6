# lie_test.py
#
# Automated unit tests for the basis of sp_2g(Z/L) and the trace form
from spcgt.linalg import ZMatrix, rank_mod_p
from spcgt.modules.lie import check_basis, lie_coordinates, random_lie_element, sp_basis_labels, sp_dim, \
    sp_lie_basis, trace_form_gram
from spcgt.groups.symplectic import is_lie_element
from spcgt.utils import InvalidArgument, SpcgtInternalError
import numpy as np
import unittest


class LieBasisTest(unittest.TestCase):
    def testDimensions(self):
        self.assertEqual([3, 10, 21, 36, 55], [sp_dim(g) for g in range(1, 6)])
        for g in [1, 2, 3]:
            self.assertEqual(sp_dim(g), len(sp_lie_basis(g, 5)))
            self.assertEqual(sp_dim(g), len(sp_basis_labels(g)))

    def testLabels(self):
        self.assertEqual(['A_1,1', 'A_1,2', 'A_2,1', 'A_2,2', 'B_1', "B'_1", 'B_2', "B'_2", 'C_1,2', "C'_1,2"],
                         sp_basis_labels(2))

    def testBasisLiesInTheAlgebra(self):
        for g, modulus in [(1, 2), (2, 3), (3, 4)]:
            self.assertTrue(check_basis(g, modulus))

    def testCoordinatesRoundTrip(self):
        basis = sp_lie_basis(2, 7)
        coords = [3, 0, 6, 1, 2, 5, 0, 4, 1, 1]
        total = ZMatrix.zeros(4, 4, 7)
        for c, b in zip(coords, basis):
            total = total + c * b
        self.assertEqual(coords, lie_coordinates(total, 2))

    def testCoordinatesRejectNonElements(self):
        self.assertRaises(SpcgtInternalError, lambda: lie_coordinates(ZMatrix.identity(4, 7), 2))

    def testRandomElements(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            self.assertTrue(is_lie_element(random_lie_element(2, 5, rng), 2, 5))


class TraceFormTest(unittest.TestCase):
    def testNondegenerate(self):
        for g in [1, 2, 3, 4]:
            for p in [3, 5, 7]:
                self.assertEqual(sp_dim(g), rank_mod_p(trace_form_gram(g, p).array, p))

    def testEntries(self):
        gram = trace_form_gram(2, 5)
        self.assertEqual(2, gram[1, 2])
        self.assertEqual(2, gram[0, 0])
        self.assertEqual(1, gram[4, 5])
        self.assertEqual(2, gram[8, 9])
        self.assertEqual(gram, gram.T)

    def testOddPrimesOnly(self):
        self.assertRaises(InvalidArgument, lambda: trace_form_gram(2, 2))
        self.assertRaises(InvalidArgument, lambda: trace_form_gram(2, 9))


if __name__ == '__main__':
    unittest.main()
