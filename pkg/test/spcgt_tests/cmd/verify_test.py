# verify_test.py
#
# Automated unit tests for `spcgt verify` and the checks behind it
from spcgt.checks import CHECKS, Check, Context, check_bcj, check_cache_integrity, check_closed_coinvariants, \
    check_coefficient_crt, check_crt_membership, check_omega_equivariance, check_relators, check_standard_mod_two, \
    check_trace_form, run_checks
from spcgt.cmd.verify import run_verification
from spcgt.config import load_config
from unittest import mock
import json
import os
import shutil
import tempfile
import unittest

rmrf = shutil.rmtree


def passing_check(ctx):
    return True, 'fine'


def failing_check(ctx):
    return False, 'not fine'


def raising_check(ctx):
    raise ValueError('boom')


class ChecksTest(unittest.TestCase):
    def setUp(self):
        self.ctx = Context(load_config(use_cache=False))

    def testNamesAreUnique(self):
        names = [c.name for c in CHECKS]
        self.assertEqual(len(names), len(set(names)))
        self.assertEqual(['sp6-adjoint', 'sp4-mod-3'], [c.name for c in CHECKS if c.full_only])

    def testContextCachesGroups(self):
        self.assertIs(self.ctx.group(1, 3), self.ctx.group(1, 3))

    def testIndividualChecks(self):
        for check in [check_trace_form, check_relators, check_omega_equivariance, check_closed_coinvariants,
                      check_bcj, check_cache_integrity, check_standard_mod_two, check_coefficient_crt,
                      check_crt_membership]:
            passed, detail = check(self.ctx)
            self.assertTrue(passed, '%s: %s' % (check.__name__, detail))
            self.assertIsInstance(detail, str)

    def testReportShape(self):
        fake = [Check('a', 'first', passing_check, False), Check('b', 'second', failing_check, False),
                Check('c', 'third', raising_check, False), Check('d', 'slow', passing_check, True)]
        with mock.patch('spcgt.checks.CHECKS', fake):
            quick = run_checks(load_config(use_cache=False), 'quick')
            full = run_checks(load_config(use_cache=False), 'full')
        self.assertEqual(['a', 'b', 'c'], [c['name'] for c in quick['checks']])
        self.assertEqual(['a', 'b', 'c', 'd'], [c['name'] for c in full['checks']])
        self.assertFalse(quick['passed'])
        self.assertEqual('quick', quick['suite'])
        self.assertEqual({'anchor': 'third', 'detail': 'ValueError: boom', 'name': 'c', 'passed': False},
                         quick['checks'][2])

class RunVerificationTest(unittest.TestCase):
    class TempDir(object):
        def __enter__(self):
            self.workdir = tempfile.mkdtemp(prefix='spcgt_verify_test_')
            return self.workdir

        def __exit__(self, exc_type, exc_val, exc_tb):
            rmrf(self.workdir)

    def testPassingSuite(self):
        with self.TempDir() as workdir, mock.patch('spcgt.checks.CHECKS', [Check('a', 'x', passing_check, False)]):
            out = os.path.join(workdir, 'report.json')
            run_verification('quick', None, False, out=out)
            with open(out, 'r', encoding='utf-8') as f:
                self.assertTrue(json.load(f)['passed'])

    def testQuickSuiteExitsCleanly(self):
        # The real quick suite, end to end: no SystemExit, and every check in the report passed.
        with self.TempDir() as workdir:
            out = os.path.join(workdir, 'report.json')
            run_verification('quick', None, False, out=out)
            with open(out, 'r', encoding='utf-8') as f:
                report = json.load(f)
        self.assertTrue(report['passed'], [c for c in report['checks'] if not c['passed']])
        self.assertEqual(len([c for c in CHECKS if not c.full_only]), len(report['checks']))

    def testFailingSuiteExits(self):
        fake = [Check('a', 'x', passing_check, False), Check('b', 'y', failing_check, False)]
        with self.TempDir() as workdir, mock.patch('spcgt.checks.CHECKS', fake):
            out = os.path.join(workdir, 'report.json')
            with self.assertRaises(SystemExit) as cm:
                run_verification('quick', None, False, out=out)
            self.assertEqual(1, cm.exception.code)
            with open(out, 'r', encoding='utf-8') as f:
                self.assertEqual([True, False], [c['passed'] for c in json.load(f)['checks']])


if __name__ == '__main__':
    unittest.main()
