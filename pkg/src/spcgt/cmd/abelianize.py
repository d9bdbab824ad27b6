"""
spcgt/cmd/abelianize.py

Interactive command-line wrapper on top of the infrastructure that assembles the abelianization of
the level L subgroup of the mapping class group of a genus g surface with b <= 1 boundary
components, from its symplectic part and the kernel K_{g,b}(L).
"""

from spcgt.bcj.boolean import dim_Bbar
from spcgt.bcj.forms import MAX_TABLE_GENUS
from spcgt.linalg import AbelianGroupStructure
from spcgt.utils import UnsupportedCase, emit_json, require_int
from math import comb
import logging

log = logging.getLogger(__name__)

MIN_GENUS = 5

ASSEMBLY = '0 -> K_{g,b}(L) -> H_1(Mod_{g,b}(L); Z) -> H_1(Sp_2g(Z, L); Z) -> 0'


def check_level(L):
    require_int('L', L, 2)
    if L % 4 == 0:
        raise UnsupportedCase('L=%d is divisible by 4, but the closed formulas require 4 ∤ L' % (L,))


def check_genus(g, minimum, force):
    '''
    Returns True when g lies outside the theorem's range and `force` let it through anyway.
    '''
    require_int('g', g, 1)
    if g >= minimum:
        return False
    if not force:
        raise UnsupportedCase('g=%d is below the hypothesis g >= %d; pass --force to compute it anyway' % (
            g, minimum))
    log.warning('g=%d lies OUTSIDE the theorem hypothesis g >= %d; the output is extrapolated', g, minimum)
    return True


def cyclic_power(order, count):
    return AbelianGroupStructure.from_cyclic_orders([order] * count)


def sp_part(g, L):
    '''
    H_1(Sp_2g(Z, L); Z).  For odd L this is sp_2g(Z/L) = (Z/L)^(2g^2+g); for even L only the
    extension by (Z/2)^2g is known, so an unresolved extension record is returned.
    '''
    quotient = cyclic_power(L, 2 * g * g + g)
    if L % 2:
        return {
            'kind': 'group',
            'structure': quotient.to_json(),
        }
    return {
        'kind': 'extension',
        'kernel': cyclic_power(2, 2 * g).to_json(),
        'quotient': quotient.to_json(),
        'resolved': False,
        'sequence': '0 -> (Z/2)^2g -> H_1(Sp_2g(Z, L); Z) -> sp_2g(Z/L) -> 0',
    }


def bcj_dimension(g, boundary):
    'Dimension over Z/2 of B_2(2g)/B_0(2g) (b=1), or of its restriction to Arf-zero forms (b=0).'
    if boundary:
        return 2 * g + comb(2 * g, 2)
    if g > MAX_TABLE_GENUS:
        raise UnsupportedCase('the closed-surface Birman-Craggs-Johnson part is only tabulated for g <= %d' % (
            MAX_TABLE_GENUS,))
    return dim_Bbar(g, 2) - dim_Bbar(g, 0)


def k_part(g, L, boundary):
    '''
    K_{g,b}(L): the Johnson part wedge^3 H_L (b=1) or (wedge^3 H_L)/H_L (b=0), plus the
    Birman-Craggs-Johnson part when L is even.
    '''
    johnson = cyclic_power(L, comb(2 * g, 3) - (0 if boundary else 2 * g))
    bcj = cyclic_power(2, bcj_dimension(g, boundary)) if L % 2 == 0 else None
    structure = johnson if bcj is None else bcj.direct_sum(johnson)
    return {
        'bcj_part': None if bcj is None else bcj.to_json(),
        'johnson_part': johnson.to_json(),
        'structure': structure.to_json(),
    }


def abelianization_report(g, L, boundary, force=False):
    check_level(L)
    if boundary not in (0, 1):
        raise UnsupportedCase('only surfaces with 0 or 1 boundary components are covered, found b=%r' % (boundary,))
    outside = check_genus(g, MIN_GENUS, force)
    report = {
        'L': L,
        'assembly': ASSEMBLY,
        'boundary': boundary,
        'g': g,
        'hypotheses': ['g >= %d' % (MIN_GENUS,), '4 ∤ L'],
        'k_part': k_part(g, L, boundary),
        'outside_theorem_hypotheses': outside,
        'sp_part': sp_part(g, L),
    }
    log.info('H_1(Mod_{%d,%d}(%d)): K = %s', g, boundary, L, report['k_part']['structure']['symbol'])
    return report


def abelianize(g, L, boundary, force, out='-'):
    emit_json(abelianization_report(g, L, boundary, force), out)
