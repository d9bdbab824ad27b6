"""
spcgt/modules/lie.py

The symplectic Lie algebra sp_2g(Z/L): its fixed basis, coordinates in that basis, and the trace
form.

Writing an element as the block matrix (a, b; c, -a^t) with b and c symmetric, the basis is

    A_ij  = E_ij - E_(g+j)(g+i)        all i, j       coefficient a[i][j]
    B_i   = E_(g+i)i                                  coefficient c[i][i]
    B'_i  = E_i(g+i)                                  coefficient b[i][i]
    C_ij  = E_(g+i)j + E_(g+j)i        i < j          coefficient c[i][j]
    C'_ij = E_i(g+j) + E_j(g+i)        i < j          coefficient b[i][j]

ordered as all A_ij row-major, then B_1, B'_1, ..., B_g, B'_g, then C_ij, C'_ij for i < j in
lexicographic order.
"""

from spcgt.groups.symplectic import is_lie_element
from spcgt.linalg import ZMatrix, is_prime
from spcgt.utils import InvalidArgument, SpcgtInternalError, require_int
import logging
import numpy as np

log = logging.getLogger(__name__)


def sp_dim(g):
    return 2 * g * g + g


def sp_basis_labels(g):
    labels = ['A_%d,%d' % (i + 1, j + 1) for i in range(g) for j in range(g)]
    for i in range(g):
        labels += ['B_%d' % (i + 1,), "B'_%d" % (i + 1,)]
    for i in range(g):
        for j in range(i + 1, g):
            labels += ['C_%d,%d' % (i + 1, j + 1), "C'_%d,%d" % (i + 1, j + 1)]
    return labels


def _sp_basis_arrays(g):
    n = 2 * g
    result = []

    def unit(*cells):
        a = np.zeros((n, n), dtype=np.int64)
        for (r, c), v in cells:
            a[r, c] += v
        return a

    for i in range(g):
        for j in range(g):
            result.append(unit(((i, j), 1), ((g + j, g + i), -1)))
    for i in range(g):
        result.append(unit(((g + i, i), 1)))
        result.append(unit(((i, g + i), 1)))
    for i in range(g):
        for j in range(i + 1, g):
            result.append(unit(((g + i, j), 1), ((g + j, i), 1)))
            result.append(unit(((i, g + j), 1), ((j, g + i), 1)))
    return result


def sp_lie_basis(g, modulus):
    require_int('g', g, 1)
    require_int('L', modulus, 2)
    return [ZMatrix.from_array(a, modulus) for a in _sp_basis_arrays(g)]


def lie_coordinates(a, g):
    '''
    Coordinates of A in sp_lie_basis(g, L).  Raises SpcgtInternalError when A is not in sp_2g,
    since every caller only ever feeds it elements of the algebra.
    '''
    x = a.array
    coords = [int(x[i, j]) for i in range(g) for j in range(g)]
    for i in range(g):
        coords += [int(x[g + i, i]), int(x[i, g + i])]
    for i in range(g):
        for j in range(i + 1, g):
            coords += [int(x[g + i, j]), int(x[i, g + j])]
    if a.modulus:
        coords = [c % a.modulus for c in coords]
        rebuilt = np.zeros((2 * g, 2 * g), dtype=object)
        for c, b in zip(coords, _sp_basis_arrays(g)):
            rebuilt = rebuilt + c * b
        if ZMatrix.from_array(rebuilt, a.modulus) != a:
            raise SpcgtInternalError('matrix is not in the span of the sp basis')
    return coords


def lie_array_coordinates(stack, g):
    'Vectorized lie_coordinates over an (N, 2g, 2g) array; no membership check.'
    rows, cols = [], []
    for i in range(g):
        for j in range(g):
            rows.append(i)
            cols.append(j)
    for i in range(g):
        rows += [g + i, i]
        cols += [i, g + i]
    for i in range(g):
        for j in range(i + 1, g):
            rows += [g + i, i]
            cols += [j, g + j]
    return stack[:, rows, cols]


def random_lie_element(g, p, rng):
    'A uniformly random element of sp_2g(Z/p), drawn from the numpy Generator `rng`.'
    coeffs = rng.integers(0, p, size=sp_dim(g))
    total = np.zeros((2 * g, 2 * g), dtype=object)
    for c, b in zip(coeffs, _sp_basis_arrays(g)):
        total = total + int(c) * b
    return ZMatrix.from_array(total, p)


def trace_form_gram(g, p):
    '''
    Gram matrix of (x, y) = Trace(xy) on the sp basis over Z/p.  Each row has a single nonzero
    entry: 2 on (A_ij, A_ji), 1 on (B_i, B'_i) and 2 on (C_ij, C'_ij).  The form is only considered
    for odd primes.
    '''
    require_int('g', g, 1)
    if not is_prime(p):
        raise InvalidArgument('the trace form is defined here only over prime fields, found %d' % (p,))
    if p == 2:
        raise InvalidArgument('the trace form on sp_2g(Z/2) is degenerate; only odd primes are supported')
    basis = _sp_basis_arrays(g)
    n = len(basis)
    gram = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            gram[a, b] = int(np.trace(basis[a] @ basis[b]))
    return ZMatrix.from_array(gram, p)


def check_basis(g, modulus):
    'Every basis element passes is_lie_element; used by the test suites.'
    return all(is_lie_element(x, g, modulus) for x in sp_lie_basis(g, modulus))
