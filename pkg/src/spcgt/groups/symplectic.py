"""
spcgt/groups/symplectic.py

The symplectic form, membership tests for Sp_2g and sp_2g, and the fixed transvection generators.
"""

from spcgt.linalg import ZMatrix, crt_split, is_prime
from spcgt.utils import InvalidArgument, require_int
import logging
import numpy as np

log = logging.getLogger(__name__)


def omega(g, modulus=0):
    'The 2g x 2g matrix with blocks (0, I; -I, 0).'
    require_int('g', g, 1)
    a = np.zeros((2 * g, 2 * g), dtype=np.int64)
    for i in range(g):
        a[i, g + i] = 1
        a[g + i, i] = -1
    return ZMatrix.from_array(a, modulus)


def _check_square(x, g, modulus, what):
    if not isinstance(x, ZMatrix):
        raise InvalidArgument('%s must be a ZMatrix, found %r' % (what, x))
    if x.shape != (2 * g, 2 * g):
        raise InvalidArgument('%s must be %dx%d for g=%d, found %dx%d' % (what, 2 * g, 2 * g, g, x.rows, x.cols))
    if x.modulus != modulus:
        raise InvalidArgument('%s lives over modulus %d, expected %d' % (what, x.modulus, modulus))


def is_symplectic(x, g, modulus=0):
    _check_square(x, g, modulus, 'X')
    w = omega(g, modulus)
    return x.T @ w @ x == w


def is_lie_element(a, g, modulus=0):
    _check_square(a, g, modulus, 'A')
    w = omega(g, modulus)
    return (a.T @ w + w @ a).is_zero()


def symplectic_inverse(x, g):
    'X^-1 = -Omega X^t Omega, valid for any symplectic X.'
    w = omega(g, x.modulus)
    return -(w @ x.T @ w)


def pairing(x, y, g):
    'The symplectic pairing <x, y> = x^t Omega y of two integer vectors (unreduced).'
    return sum(x[i] * y[g + i] - x[g + i] * y[i] for i in range(g))


def transvection_nilpotent(v, g):
    'N = -v v^t Omega as an object array; the transvection by v is I + N and N^2 = 0.'
    v = np.array([int(c) for c in v], dtype=object)
    if v.shape != (2 * g,):
        raise InvalidArgument('transvection vector must have length %d, found %d' % (2 * g, v.shape[0]))
    w = omega(g).array
    return -np.outer(v, v) @ w


def transvection(v, g, modulus=0, power=1):
    '''
    The symplectic transvection x -> x + <x, v> v, raised to `power` (any integer), over Z/modulus
    (or Z when modulus is 0).
    '''
    n = transvection_nilpotent(v, g)
    return ZMatrix.from_array(np.eye(2 * g, dtype=object) + power * n, modulus)


def transvection_vectors(g):
    '''
    The vectors of the fixed generating set, in order: e_1..e_g, f_1..f_g (the standard basis),
    then e_i + f_j for i, j = 1..g in row-major order.
    '''
    require_int('g', g, 1)
    result = []
    for k in range(2 * g):
        v = [0] * (2 * g)
        v[k] = 1
        result.append(tuple(v))
    for i in range(g):
        for j in range(g):
            v = [0] * (2 * g)
            v[i] = 1
            v[g + j] = 1
            result.append(tuple(v))
    return result


def symplectic_generators(g, modulus):
    'The 2g + g^2 transvections along transvection_vectors(g), reduced mod L.'
    require_int('g', g, 1)
    require_int('L', modulus, 2)
    return [transvection(v, g, modulus) for v in transvection_vectors(g)]


def group_order_formula(g, p, k):
    '|Sp_2g(Z/p^k)| = p^((k-1)(2g^2+g)) * p^(g^2) * prod_{i=1..g} (p^(2i) - 1).'
    require_int('g', g, 1)
    require_int('k', k, 1)
    if not is_prime(p):
        raise InvalidArgument('group_order_formula needs a prime, found %d' % (p,))
    order = p ** ((k - 1) * (2 * g * g + g)) * p ** (g * g)
    for i in range(1, g + 1):
        order *= p ** (2 * i) - 1
    return order


def predicted_order(g, modulus):
    '|Sp_2g(Z/L)| as the product of the prime-power orders over the CRT decomposition of L.'
    order = 1
    for p, k in crt_split(modulus):
        order *= group_order_formula(g, p, k)
    return order


def reduce_level(x, target):
    '''
    Reduction Sp_2g(Z/L) -> Sp_2g(Z/target) for target | L.  Elements of the kernel have the form
    I + target*B; see kernel_lie_part().
    '''
    if x.rows != x.cols or x.rows % 2:
        raise InvalidArgument('expected a square matrix of even size, found %dx%d' % (x.rows, x.cols))
    g = x.rows // 2
    if not is_symplectic(x, g, x.modulus):
        raise InvalidArgument('cannot reduce a matrix that is not symplectic modulo %d' % (x.modulus,))
    return x.reduce(target)


def kernel_lie_part(x, target, p):
    '''
    For X = I + target*B in the kernel of reduction mod `target`, returns B mod p.  When X is
    symplectic modulo target*p this lies in sp_2g(Z/p).
    '''
    g = x.rows // 2
    if not x.reduce(target).is_identity():
        raise InvalidArgument('matrix is not congruent to the identity modulo %d' % (target,))
    d = x.lift() - ZMatrix.identity(2 * g)
    return ZMatrix.from_array(d.array // target, p)
