"""
spcgt/groups/congruence.py

Integral elements of the congruence subgroup Sp_2g(Z, L), the map phi to sp_2g(Z/L), and the Igusa
vector.  The congruence subgroup is infinite, so it is only ever sampled.
"""

from spcgt.groups.symplectic import is_symplectic, transvection_nilpotent
from spcgt.linalg import ZMatrix
from spcgt.utils import InvalidArgument, require_int
import logging
import numpy as np

log = logging.getLogger(__name__)


class CongruenceElement(object):
    'An integral symplectic matrix congruent to the identity modulo its level L.'

    def __init__(self, matrix, level):
        require_int('L', level, 2)
        if not isinstance(matrix, ZMatrix) or matrix.modulus:
            raise InvalidArgument('a congruence element needs an integral ZMatrix, found %r' % (matrix,))
        if matrix.rows != matrix.cols or matrix.rows % 2:
            raise InvalidArgument('expected a square matrix of even size, found %dx%d' % (matrix.rows, matrix.cols))
        self.g = matrix.rows // 2
        if not matrix.reduce(level).is_identity():
            raise InvalidArgument('matrix is not congruent to the identity modulo %d' % (level,))
        if not is_symplectic(matrix, self.g):
            raise InvalidArgument('matrix is not symplectic over Z')
        self.matrix = matrix
        self.level = level

    def __mul__(self, other):
        if not isinstance(other, CongruenceElement) or other.level != self.level:
            return NotImplemented
        return CongruenceElement(self.matrix @ other.matrix, self.level)

    def __repr__(self):
        return 'CongruenceElement(level=%d, matrix=%r)' % (self.level, self.matrix)


def phi(m):
    'Writes M = I + L*A and returns A mod L, an element of sp_2g(Z/L).'
    if not isinstance(m, CongruenceElement):
        raise InvalidArgument('phi needs a CongruenceElement, found %r' % (m,))
    d = m.matrix.array.astype(object) - np.eye(2 * m.g, dtype=object)
    if np.any(d % m.level):
        raise InvalidArgument('matrix is not congruent to the identity modulo %d' % (m.level,))
    return ZMatrix.from_array(d // m.level, m.level)


def igusa_vector(m):
    '''
    For even L and M = I + L*(A, B; C, D), the vector (diag B, diag C) mod 2 in (Z/2)^2g.  It
    vanishes exactly on Sp_2g(Z, L, 2L).
    '''
    if not isinstance(m, CongruenceElement):
        raise InvalidArgument('igusa_vector needs a CongruenceElement, found %r' % (m,))
    if m.level % 2:
        raise InvalidArgument('the Igusa vector needs an even level, found %d' % (m.level,))
    a = phi(m).lift().array
    g = m.g
    return tuple(int(a[i, g + i]) % 2 for i in range(g)) + tuple(int(a[g + i, i]) % 2 for i in range(g))


def congruence_transvection(v, g, level, power=1):
    'T_v^(L*power), an element of Sp_2g(Z, L).'
    n = transvection_nilpotent(v, g)
    return CongruenceElement(ZMatrix.from_array(np.eye(2 * g, dtype=object) + level * power * n), level)


def sample_congruence_element(g, level, seed, word_length=20):
    '''
    A deterministic pseudo-random product of word_length factors T_v^(+-L), with v a random
    nonzero integral vector with entries in {-1, 0, 1}.  Every factor lies in Sp_2g(Z, L), and so
    does the product.
    '''
    require_int('g', g, 1)
    require_int('L', level, 2)
    require_int('word_length', word_length, 1)
    rng = np.random.default_rng(seed)
    result = np.eye(2 * g, dtype=object)
    for _ in range(word_length):
        v = [0] * (2 * g)
        while not any(v):
            v = [int(c) for c in rng.integers(-1, 2, size=2 * g)]
        sign = 1 if rng.integers(0, 2) else -1
        result = result @ (np.eye(2 * g, dtype=object) + sign * level * transvection_nilpotent(v, g))
    return CongruenceElement(ZMatrix.from_array(result), level)
