# zmatrix_test.py
#
# Automated unit tests for ZMatrix
#   - in particular, exact arithmetic over Z and Z/L and the canonical byte encoding
from spcgt.linalg import ZMatrix, matmul_mod
from spcgt.utils import InvalidArgument
import numpy as np
import unittest


class ZMatrixTest(unittest.TestCase):

    def testEntriesAreReducedIntoRange(self):
        self.assertEqual([[3, 1]], ZMatrix([[-1, 5]], 4).to_rows())

    def testIntegralEntriesAreKept(self):
        m = ZMatrix([[-7, 2 ** 70]])
        self.assertEqual([[-7, 2 ** 70]], m.to_rows())
        self.assertEqual(0, m.modulus)

    def testProductAndIdentity(self):
        a = ZMatrix([[1, 2], [3, 4]], 5)
        self.assertEqual(a, a @ ZMatrix.identity(2, 5))
        self.assertEqual([[2, 0], [0, 2]], (a @ a).to_rows())

    def testProductShapeMismatch(self):
        a = ZMatrix([[1, 2, 3]], 7)
        self.assertRaises(InvalidArgument, lambda: a @ a)

    def testModulusMismatch(self):
        self.assertRaises(InvalidArgument, lambda: ZMatrix([[1]], 3) + ZMatrix([[1]], 5))

    def testLargeModulusStaysExact(self):
        modulus = 2 ** 61 - 1
        a = ZMatrix([[2 ** 40]], modulus)
        self.assertEqual(2 ** 19, (a @ a)[0, 0])

    def testMatmulModAgreesWithObjectArithmetic(self):
        rng = np.random.default_rng(7)
        a = rng.integers(0, 97, size=(4, 6))
        b = rng.integers(0, 97, size=(6, 3))
        expected = (a.astype(object) @ b.astype(object)) % 97
        self.assertTrue(np.all(matmul_mod(a, b, 97) == expected))

    def testPowers(self):
        t = ZMatrix([[1, 1], [0, 1]], 5)
        self.assertTrue((t ** 5).is_identity())
        self.assertFalse((t ** 4).is_identity())
        self.assertEqual(ZMatrix.identity(2, 5), t ** 0)
        self.assertRaises(InvalidArgument, lambda: t ** -1)

    def testScalarMultiplicationAndTranspose(self):
        a = ZMatrix([[1, 2], [3, 4]], 6)
        self.assertEqual([[3, 0], [3, 0]], (3 * a).to_rows())
        self.assertEqual([[1, 3], [2, 4]], a.T.to_rows())

    def testReduce(self):
        a = ZMatrix([[5, 7]], 12)
        self.assertEqual([[1, 3]], a.reduce(4).to_rows())
        self.assertRaises(InvalidArgument, lambda: a.reduce(5))
        self.assertEqual([[5, 7]], a.lift().to_rows())
        self.assertEqual(0, a.lift().modulus)

    def testApply(self):
        a = ZMatrix([[1, 2], [0, 1]], 3)
        self.assertEqual((2, 1), a.apply([0, 1]))
        self.assertRaises(InvalidArgument, lambda: a.apply([1, 2, 3]))

    def testCanonicalBytes(self):
        self.assertEqual(b'\x01\x00\x2b\x01', ZMatrix([[1, 299]], 300).canonical_bytes())
        self.assertEqual(b'\x01\x00\x00\x01', ZMatrix.identity(2, 2).canonical_bytes())
        self.assertRaises(InvalidArgument, lambda: ZMatrix([[1]]).canonical_bytes())

    def testEqualityAndHashing(self):
        a = ZMatrix([[1, 2], [3, 4]], 5)
        b = ZMatrix([[6, 7], [8, 9]], 5)
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertNotEqual(a, ZMatrix([[1, 2], [3, 4]], 7))
        self.assertEqual(1, len({a, b}))

    def testMatrixUnit(self):
        e = ZMatrix.unit(2, 3, 1, 2, 4)
        self.assertEqual([[0, 0, 0], [0, 0, 1]], e.to_rows())

    def testRejectsNonMatrices(self):
        self.assertRaises(InvalidArgument, lambda: ZMatrix([[[1]]], 2))
        self.assertRaises(InvalidArgument, lambda: ZMatrix([[1]], -3))


if __name__ == '__main__':
    unittest.main()
