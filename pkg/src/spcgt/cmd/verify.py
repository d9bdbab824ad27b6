"""
spcgt/cmd/verify.py

Interactive command-line wrapper on top of the infrastructure that runs the verification suites.
"""

from spcgt.checks import run_checks
from spcgt.config import load_config
from spcgt.utils import emit_json
import logging
import sys

log = logging.getLogger(__name__)


def run_verification(suite, config_path, use_cache, out='-'):
    config = load_config(config_path, use_cache=use_cache)
    report = run_checks(config, suite)
    emit_json(report, out)

    failed = [c['name'] for c in report['checks'] if not c['passed']]
    if failed:
        log.error('%d check(s) failed: %s', len(failed), ', '.join(failed))
        sys.exit(1)
