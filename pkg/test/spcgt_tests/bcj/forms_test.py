# forms_test.py
#
# Automated unit tests for quadratic forms on (Z/2)^2g
#   - in particular, the Arf invariant and the orbits of Sp_2g(Z/2)
from spcgt.bcj.forms import QuadraticForm, act, all_forms, arf, arf_zero_forms, evaluate_form, intersection, \
    mask_of, orbit_arf_classification, orbit_report_json
from spcgt.groups.symplectic import symplectic_generators
from spcgt.utils import InvalidArgument
import unittest


class QuadraticFormTest(unittest.TestCase):
    def testConstruction(self):
        f = QuadraticForm.from_interleaved(2, [1, 0, 0, 1])
        self.assertEqual((1, 0, 0, 1), f.basis_values)
        self.assertEqual(0b1001, f.mask)
        self.assertEqual(f, QuadraticForm.from_mask(2, 0b1001))
        self.assertEqual((1, 0, 1, 0), QuadraticForm.from_interleaved(2, [1, 1, 0, 0]).basis_values)

    def testRejectsBadValues(self):
        self.assertRaises(InvalidArgument, lambda: QuadraticForm(2, [1, 0]))
        self.assertRaises(InvalidArgument, lambda: QuadraticForm(1, [2, 0]))
        self.assertRaises(InvalidArgument, lambda: QuadraticForm.from_interleaved(2, [1]))
        self.assertRaises(InvalidArgument, lambda: evaluate_form(QuadraticForm(1, [0, 0]), 0b100))

    def testRefinesTheIntersectionPairing(self):
        for f in all_forms(2):
            for x in range(16):
                for y in range(16):
                    self.assertEqual(f(x ^ y), (f(x) + f(y) + intersection(x, y, 2)) % 2)

    def testExpansionOrderDoesNotMatter(self):
        for f in all_forms(2):
            for x in range(16):
                expected = evaluate_form(f, x)
                self.assertEqual(expected, evaluate_form(f, x, order=[3, 2, 1, 0]))
                self.assertEqual(expected, evaluate_form(f, x, order=[2, 0, 3, 1]))
        self.assertRaises(InvalidArgument, lambda: evaluate_form(all_forms(1)[0], 3, order=[0, 0]))

    def testHyperbolicPair(self):
        f = QuadraticForm(1, [1, 0])
        self.assertEqual(0, f([1, 1]))
        self.assertEqual(1, QuadraticForm(1, [0, 0])(0b11))

    def testArf(self):
        self.assertEqual(0, arf(QuadraticForm.from_interleaved(2, [1, 0, 0, 1])))
        self.assertEqual(1, arf(QuadraticForm.from_interleaved(2, [1, 1, 0, 0])))
        self.assertEqual([3, 10, 36], [len(arf_zero_forms(g)) for g in [1, 2, 3]])
        self.assertEqual(64, len(all_forms(3)))
        self.assertRaises(InvalidArgument, lambda: all_forms(7))


class ActionTest(unittest.TestCase):
    def testActionTransportsValues(self):
        g = 2
        for x in symplectic_generators(g, 2):
            for f in all_forms(g):
                moved = act(x, f)
                self.assertEqual(arf(f), arf(moved))
                for v in range(1 << (2 * g)):
                    column = [(v >> k) & 1 for k in range(2 * g)]
                    self.assertEqual(f(v), moved(mask_of(x.apply(column))))

    def testShapeMismatch(self):
        x = symplectic_generators(2, 2)[0]
        self.assertRaises(InvalidArgument, lambda: act(x, all_forms(1)[0]))

    def testOrbitsAreArfFibers(self):
        report = orbit_arf_classification(1)
        self.assertEqual([3, 1], [len(o) for o in report.orbits])
        self.assertEqual((0, 1), report.orbit_arfs)
        self.assertTrue(report.separates)

        report = orbit_arf_classification(2)
        self.assertEqual({'g': 2, 'orbit_arfs': [0, 1], 'orbit_sizes': [10, 6], 'separates': True},
                         orbit_report_json(report))

    def testOrbitGenusLimit(self):
        self.assertRaises(InvalidArgument, lambda: orbit_arf_classification(4))


if __name__ == '__main__':
    unittest.main()
