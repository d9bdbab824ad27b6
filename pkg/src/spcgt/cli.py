#!/usr/bin/env python
"""
spcgt

Symplectic congruence group toolkit

Evaluates the closed-form abelianization and Picard group answers for level L congruence subgroups,
computes twisted (co)homology of Sp_2g(Z/L), and runs the verification suites.  Every verb prints a
single JSON document on stdout.
"""

from spcgt.cmd import *
from spcgt.modules.standard import MODULE_SPECS, check_module_spec
from spcgt.utils import InvalidArgument, SpcgtFatalError
import argparse
import logging
import sys

log = logging.getLogger(__name__)


def main():
    parser = argparse.ArgumentParser(prog='spcgt')
    parser.add_argument('--verbose', '-v', action='count', default=0, help='Increase verbosity level')
    subparsers = parser.add_subparsers(help='verb')

    def add_group_args(subparser):
        subparser.add_argument('--g', metavar='G', type=int, required=True, help='The genus; the group is Sp_2g')
        subparser.add_argument('--L', metavar='L', type=int, required=True, help='The level')

    def add_out_args(subparser):
        subparser.add_argument('--out', action='store', default='-',
                               help='Output file; use a single hyphen for stdout.  Defaults to `%(default)s`.')

    def add_config_args(subparser):
        subparser.add_argument('--config', metavar='PATH', action='store', dest='config_path', default=None,
                               help='A YAML configuration file, loaded after the one named by $SPCGT_CONFIG')
        subparser.add_argument('--no-cache', action='store_false', dest='use_cache', default=None,
                               help='Neither read nor write the Cayley cache; always enumerate from scratch')

    def module_spec(value):
        try:
            return check_module_spec(value)
        except InvalidArgument as e:
            raise argparse.ArgumentTypeError(str(e))

    subparser = subparsers.add_parser('abelianize', help='Report H_1(Mod_{g,b}(L); Z) for 4 ∤ L',
                                      description='Assembles H_1 of the level L subgroup of the mapping class ' +
                                      'group from H_1(Sp_2g(Z, L); Z) and the kernel K_{g,b}(L).  Only levels ' +
                                      'not divisible by 4 are covered, and the genus must be at least 5.')
    subparser.set_defaults(func=abelianize)
    add_group_args(subparser)
    subparser.add_argument('--boundary', metavar='B', type=int, choices=[0, 1], default=1,
                           help='Number of boundary components, 0 or 1.  Defaults to `%(default)s`.')
    subparser.add_argument('--force', action='store_true', default=False,
                           help='Compute genera below the theorem range anyway; the output is flagged as ' +
                           'outside the theorem hypotheses.  Never relaxes the 4 ∤ L requirement.')
    add_out_args(subparser)

    subparser = subparsers.add_parser('picard', help='Report the divisibility of the Hodge class at level L')
    subparser.set_defaults(func=picard)
    subparser.add_argument('--space', choices=['mg', 'ag'], required=True,
                           help='mg: moduli space of curves (g >= 5); ag: principally polarized abelian ' +
                           'varieties (g >= 4)')
    add_group_args(subparser)
    subparser.add_argument('--force', action='store_true', default=False,
                           help='Compute genera below the theorem range anyway')
    add_out_args(subparser)

    subparser = subparsers.add_parser('h1', help='Compute H^1 or H_1 of Sp_2g(Z/L) with twisted coefficients')
    subparser.set_defaults(func=compute_h1)
    add_group_args(subparser)
    subparser.add_argument('--module', metavar='MODULE', dest='module_spec', type=module_spec, required=True,
                           help='One of %s, optionally prefixed by dual-of-' % (', '.join(MODULE_SPECS),))
    subparser.add_argument('--direction', choices=['co', 'ho'], default='co',
                           help='co: cohomology H^1; ho: homology H_1.  Defaults to `%(default)s`.')
    subparser.add_argument('--coefficients', metavar='Q', type=int, default=None,
                           help='Reduce the module coefficients to Z/Q for some Q dividing L')
    subparser.add_argument('--timings', action='store_true', default=False,
                           help='Include wall-clock timings in the output (which makes it non-deterministic)')
    add_config_args(subparser)
    add_out_args(subparser)

    subparser = subparsers.add_parser('verify', help='Run the verification suites')
    subparser.set_defaults(func=run_verification)
    subparser.add_argument('--suite', choices=['quick', 'full'], default='quick',
                           help='quick stays on groups of at most 10^4 elements; full adds Sp_6(Z/2) and ' +
                           'Sp_4(Z/3).  Defaults to `%(default)s`.')
    add_config_args(subparser)
    add_out_args(subparser)

    ns = parser.parse_args()

    logging.basicConfig(level=
        {
            0 : logging.WARNING,
            1 : logging.INFO,
            2 : logging.DEBUG,
        }.get(
            min(max(ns.verbose, 0), 2)
        ))

    log.debug('Arguments: %s', ns)

    kwargs = dict(vars(ns))
    try:
        del kwargs['func']
        del kwargs['verbose']
    except KeyError:
        parser.print_help()
        sys.exit(1)

    try:
        ns.func(**kwargs)
    except SpcgtFatalError as e:
        # Any supplemental diagnostics are already logged; the exception carries the one-line
        # message to print before exiting with a non-zero status.

        if ns.verbose > 1:
            raise

        sys.stderr.write('fatal: ')
        sys.stderr.write(str(e))
        sys.stderr.write('\n')
        sys.exit(1)


if __name__ == '__main__':
    main()
