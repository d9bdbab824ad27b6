# h1_test.py
#
# Automated unit tests for `spcgt h1`
from spcgt.cmd.h1 import compute_h1, h1_report
from spcgt.config import load_config
from spcgt.utils import InvalidArgument
import json
import os
import shutil
import tempfile
import unittest

rmrf = shutil.rmtree


class H1ReportTest(unittest.TestCase):
    class TempDir(object):
        def __enter__(self):
            self.workdir = tempfile.mkdtemp(prefix='spcgt_h1_test_')
            return self.workdir

        def __exit__(self, exc_type, exc_val, exc_tb):
            rmrf(self.workdir)

    def setUp(self):
        self.config = load_config(use_cache=False)

    def testStandardModTwo(self):
        with self.assertLogs('spcgt.cmd.h1', level='WARNING'):
            report = h1_report(2, 2, 'standard', 'co', config=self.config)
        self.assertEqual([2], report['invariant_factors'])
        self.assertEqual('Z/2', report['structure']['symbol'])
        self.assertEqual({'L': 2, 'g': 2, 'order': 720}, report['group'])
        self.assertEqual({'dim': 4, 'label': 'standard', 'spec': 'standard'}, report['module'])
        self.assertEqual('cohomology', report['direction'])
        self.assertEqual(2, report['coefficients'])
        self.assertFalse(report['cache_hit'])
        self.assertNotIn('timings_ms', report)

    def testHomologyWithTimings(self):
        report = h1_report(1, 3, 'trivial', 'ho', config=self.config, timings=True)
        self.assertEqual('homology', report['direction'])
        self.assertEqual([3], report['invariant_factors'])
        self.assertEqual({'enumeration', 'module', 'solve'}, set(report['timings_ms']))
        self.assertTrue(all(isinstance(v, int) for v in report['timings_ms'].values()))

    def testReducedCoefficients(self):
        report = h1_report(1, 6, 'trivial', 'co', coefficients=3, config=self.config)
        self.assertEqual(3, report['coefficients'])
        self.assertEqual('trivial^1 mod 3', report['module']['label'])
        self.assertEqual([3], report['invariant_factors'])
        self.assertRaises(InvalidArgument, lambda: h1_report(1, 6, 'trivial', 'co', coefficients=4, config=self.config))

    def testRejections(self):
        self.assertRaises(InvalidArgument, lambda: h1_report(1, 3, 'bogus', 'co', config=self.config))
        self.assertRaises(InvalidArgument, lambda: h1_report(0, 3, 'standard', 'co', config=self.config))
        self.assertRaises(InvalidArgument, lambda: h1_report(1, 1, 'standard', 'co', config=self.config))

    def testWritesOneJsonDocument(self):
        with self.TempDir() as workdir:
            out = os.path.join(workdir, 'h1.json')
            compute_h1(1, 5, 'adjoint', 'co', None, False, None, False, out=out)
            with open(out, 'r', encoding='utf-8') as f:
                text = f.read()
            self.assertTrue(text.endswith('}\n'))
            data = json.loads(text)
            self.assertEqual(120, data['group']['order'])
            self.assertEqual(3, data['module']['dim'])
            self.assertEqual(sorted(data), list(data))
            self.assertEqual([], [name for name in os.listdir(workdir) if name != 'h1.json'])


if __name__ == '__main__':
    unittest.main()
