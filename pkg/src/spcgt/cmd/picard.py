"""
spcgt/cmd/picard.py

Interactive command-line wrapper on top of the infrastructure that reports the divisibility of the
Hodge class in the Picard group of the level L moduli space of curves or of principally polarized
abelian varieties, together with the image of H_2.
"""

from spcgt.cmd.abelianize import check_genus, check_level, k_part, sp_part
from spcgt.utils import InvalidArgument, emit_json
import logging

log = logging.getLogger(__name__)

SPACES = {
    'mg': {
        'space': 'moduli_curves',
        'min_genus': 5,
        'even_divisor': 4,
        'generator': 'lambda_g(L)',
        'torsion': 'Hom(H_1(Mod_g(L); Z), Q/Z)',
    },
    'ag': {
        'space': 'ppav',
        'min_genus': 4,
        'even_divisor': 2,
        'generator': 'lambda^a_g(L)',
        'torsion': 'Hom(H_1(Sp_2g(Z, L); Z), Q/Z)',
    },
}


def picard_report(space, g, L, force=False):
    if space not in SPACES:
        raise InvalidArgument('unknown space %r; expected one of %s' % (space, ', '.join(sorted(SPACES))))
    info = SPACES[space]
    check_level(L)
    outside = check_genus(g, info['min_genus'], force)
    divisor = 1 if L % 2 else info['even_divisor']

    if space == 'mg':
        h1 = {
            'k_part': k_part(g, L, 0),
            'sp_part': sp_part(g, L),
        }
    else:
        h1 = {
            'sp_part': sp_part(g, L),
        }

    report = {
        'L': L,
        'divisor': divisor,
        'g': g,
        'generator': info['generator'],
        'h2_image_index': divisor,
        'outside_theorem_hypotheses': outside,
        'space': info['space'],
        'torsion_part': {
            'description': info['torsion'],
            'h1': h1,
        },
    }
    log.info('%s, g=%d, L=%d: generated modulo torsion by 1/%d %s', info['space'], g, L, divisor, info['generator'])
    return report


def picard(space, g, L, force, out='-'):
    emit_json(picard_report(space, g, L, force), out)
