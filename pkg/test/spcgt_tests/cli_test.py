# cli_test.py
#
# Automated unit tests for the spcgt command-line front end
#   - in particular, one JSON document on stdout and a one-line diagnostic on fatal errors
from spcgt.cli import main
from unittest import mock
import contextlib
import io
import json
import unittest


class CliTest(unittest.TestCase):
    def run_cli(self, *args):
        stdout, stderr = io.StringIO(), io.StringIO()
        code = 0
        with mock.patch('sys.argv', ['spcgt'] + list(args)), \
                contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            try:
                main()
            except SystemExit as e:
                code = e.code
        return code, stdout.getvalue(), stderr.getvalue()

    def testAbelianize(self):
        code, out, err = self.run_cli('abelianize', '--g', '5', '--L', '3', '--boundary', '0')
        self.assertEqual(0, code)
        self.assertEqual(1, out.count('\n'))
        data = json.loads(out)
        self.assertEqual('(Z/3)^110', data['k_part']['structure']['symbol'])
        self.assertEqual(0, data['boundary'])

    def testFatalErrors(self):
        code, out, err = self.run_cli('abelianize', '--g', '5', '--L', '4')
        self.assertEqual(1, code)
        self.assertEqual('', out)
        self.assertTrue(err.startswith('fatal: L=4 is divisible by 4'))
        self.assertEqual(1, err.count('\n'))

        code, out, err = self.run_cli('picard', '--space', 'mg', '--g', '4', '--L', '3')
        self.assertEqual(1, code)
        self.assertIn('--force', err)

    def testForce(self):
        code, out, err = self.run_cli('picard', '--space', 'ag', '--g', '3', '--L', '3', '--force')
        self.assertEqual(0, code)
        self.assertTrue(json.loads(out)['outside_theorem_hypotheses'])

    def testH1(self):
        code, out, err = self.run_cli('h1', '--g', '1', '--L', '3', '--module', 'trivial', '--no-cache')
        self.assertEqual(0, code)
        self.assertEqual([3], json.loads(out)['invariant_factors'])

    def testUsageErrors(self):
        code, out, err = self.run_cli('h1', '--g', '1', '--L', '3', '--module', 'bogus')
        self.assertEqual(2, code)
        self.assertIn('unknown module', err)
        code, out, err = self.run_cli('abelianize', '--g', '5', '--L', '3', '--boundary', '2')
        self.assertEqual(2, code)

    def testNoVerb(self):
        code, out, err = self.run_cli()
        self.assertEqual(1, code)
        self.assertIn('usage', out)


if __name__ == '__main__':
    unittest.main()
