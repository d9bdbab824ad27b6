"""
spcgt/cmd/h1.py

Interactive command-line wrapper on top of the infrastructure that computes H^1(G; M) or H_1(G; M)
for G = Sp_2g(Z/L) and one of the named modules.
"""

from spcgt.cohomology.engine import h1_cohomology, h1_homology
from spcgt.config import load_config
from spcgt.groups.enumeration import GeneratedGroup, enumerate_group
from spcgt.modules.standard import build_module, reduce_coefficients
from spcgt.utils import emit_json, require_int
import logging
import time

log = logging.getLogger(__name__)

DIRECTIONS = {
    'co': 'cohomology',
    'ho': 'homology',
}


def _elapsed_ms(started):
    return (time.monotonic_ns() - started) // 10 ** 6


def h1_report(g, L, module_spec, direction, coefficients=None, config=None, timings=False):
    config = load_config() if config is None else config
    require_int('g', g, 1)
    require_int('L', L, 2)
    direction = DIRECTIONS.get(direction, direction)
    timing = {}

    started = time.monotonic_ns()
    group = enumerate_group(GeneratedGroup.standard_group(g, L), order_cap=config['order_cap'],
                            cache_dir=config['cache_dir'], use_cache=config['use_cache'])
    timing['enumeration'] = _elapsed_ms(started)

    started = time.monotonic_ns()
    module = build_module(group, module_spec)
    if coefficients is not None:
        module = reduce_coefficients(module, coefficients)
    if module_spec == 'standard' and module.modulus == 2 and g < 3:
        log.warning('H^1 with coefficients in H_1(Sigma_g; Z/2) is stated for g >= 3 but also quoted at g=2; '
                    'computing g=%d as asked', g)
    timing['module'] = _elapsed_ms(started)

    started = time.monotonic_ns()
    if direction == 'homology':
        structure = h1_homology(group, module, config['jacobian_budget'])
    else:
        structure = h1_cohomology(group, module, config['jacobian_budget']).h1
    timing['solve'] = _elapsed_ms(started)
    log.info('Timings (ms): %s', timing)

    report = {
        'cache_hit': group.cayley.from_cache,
        'coefficients': module.modulus,
        'direction': direction,
        'group': {
            'L': L,
            'g': g,
            'order': group.order,
        },
        'invariant_factors': list(structure.invariant_factors),
        'module': {
            'dim': module.dim,
            'label': module.label,
            'spec': module_spec,
        },
        'structure': structure.to_json(),
    }
    if timings:
        report['timings_ms'] = timing
    return report


def compute_h1(g, L, module_spec, direction, coefficients, timings, config_path, use_cache, out='-'):
    config = load_config(config_path, use_cache=use_cache)
    emit_json(h1_report(g, L, module_spec, direction, coefficients, config, timings), out)
