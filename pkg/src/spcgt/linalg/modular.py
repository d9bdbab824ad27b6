"""
spcgt/linalg/modular.py

Linear algebra over Z/L: CRT utilities, incremental row reduction over prime fields, and solution
spaces over prime powers by p-adic lifting.
"""

from spcgt.constants import SPCGT_ELIMINATION_CHUNK
from spcgt.linalg.snf import abelian_quotient, prime_factorization, AbelianGroupStructure
from spcgt.linalg.zmatrix import ZMatrix, INT64_SAFE, matmul_mod, modular_dtype
from spcgt.utils import InvalidArgument, SpcgtInternalError
import logging
import numpy as np

log = logging.getLogger(__name__)


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def crt_split(modulus):
    '''
    Factors L = p_1^k_1 * ... * p_r^k_r into distinct primes in increasing order, returned as a list
    of (p, k) pairs.
    '''
    if isinstance(modulus, bool) or not isinstance(modulus, (int, np.integer)):
        raise InvalidArgument('modulus must be an integer, found %r' % (modulus,))
    if modulus < 2:
        raise InvalidArgument('cannot split modulus %d; it must be at least 2' % (modulus,))
    return prime_factorization(int(modulus))


def crt_idempotents(modulus):
    '''
    For each prime power q exactly dividing L, returns (p, k, q, e) where e = 1 mod q and e = 0 mod L/q.
    '''
    result = []
    for p, k in crt_split(modulus):
        q = p ** k
        rest = modulus // q
        e = (rest * pow(rest, -1, q)) % modulus if rest > 1 else 1
        result.append((p, k, q, e))
    return result


def crt_combine(residues, moduli):
    'The unique x mod prod(moduli) with x = r_i mod m_i, for pairwise coprime m_i.'
    total = 1
    for m in moduli:
        total *= m
    x = 0
    for r, m in zip(residues, moduli):
        rest = total // m
        x += r * rest * pow(rest % m, -1, m) if m > 1 else 0
    return x % total


def as_mod_array(a, modulus):
    'Reduces an integer array into [0, modulus) with the narrowest safe dtype.'
    a = np.asarray(a)
    if a.dtype == object or not np.issubdtype(a.dtype, np.integer):
        a = np.asarray(a, dtype=object) % modulus
    else:
        a = a.astype(np.int64) % modulus
    return a.astype(np.int64) if modulus < INT64_SAFE else a.astype(object)


def rref_mod_p(x, p):
    '''
    Reduced row echelon form of a small dense block over F_p.  Returns (rows, pivots), with the zero
    rows dropped and rows[:, pivots] the identity.
    '''
    x = x.copy()
    nrows, ncols = x.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(x[r:, c])[0]
        if not nz.size:
            continue
        i = r + nz[0]
        if i != r:
            x[[r, i]] = x[[i, r]]
        inv = pow(int(x[r, c]), -1, p)
        if inv != 1:
            x[r] = (x[r] * inv) % p
        col = x[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            x[hit] = (x[hit] - np.outer(col[hit], x[r])) % p
        pivots.append(c)
        r += 1
    return x[:r], pivots


class RowEchelonModP(object):
    '''
    A growing reduced row-echelon basis over F_p.  Rows are streamed in with add() in chunks, so a
    system with millions of equations but few unknowns never has to exist in memory at once.  The
    basis itself is canonical: it depends only on the row space, not on the insertion order.
    '''

    def __init__(self, ncols, p):
        if not is_prime(p):
            raise InvalidArgument('row reduction needs a prime field, found modulus %d' % (p,))
        self.ncols = ncols
        self.p = p
        self.dtype = modular_dtype(p, ncols + 1)
        self.basis = np.zeros((0, ncols), dtype=self.dtype)
        self.pivots = []

    @property
    def rank(self):
        return len(self.pivots)

    @property
    def is_full(self):
        return len(self.pivots) == self.ncols

    def reduce(self, rows):
        rows = np.asarray(rows)
        if rows.ndim == 1:
            rows = rows.reshape(1, -1)
        if rows.shape[1] != self.ncols:
            raise InvalidArgument('rows of length %d do not fit %d columns' % (rows.shape[1], self.ncols))
        x = as_mod_array(rows, self.p).astype(self.dtype)
        if self.pivots and len(x):
            x = (x - matmul_mod(x[:, self.pivots], self.basis, self.p)) % self.p
        return x

    def add(self, rows):
        rows = np.asarray(rows)
        if rows.ndim == 1:
            rows = rows.reshape(1, -1)
        for start in range(0, rows.shape[0], SPCGT_ELIMINATION_CHUNK):
            if self.is_full:
                break
            self._add_chunk(rows[start:start + SPCGT_ELIMINATION_CHUNK])
        return self

    def _add_chunk(self, rows):
        x = self.reduce(rows)
        x = x[np.any(x != 0, axis=1)]
        if not len(x):
            return
        new, new_pivots = rref_mod_p(x, self.p)
        if self.pivots:
            self.basis = (self.basis - matmul_mod(self.basis[:, new_pivots], new, self.p)) % self.p
        self.basis = np.vstack([self.basis, new])
        self.pivots = self.pivots + new_pivots

    def contains(self, row):
        return not np.any(self.reduce(row))

    def kernel_basis(self, limit=None):
        '''
        Columns spanning {x : B x = 0} restricted to the first `limit` coordinates (all by default);
        returned as an ncols-by-t array (limit-by-t when restricted).
        '''
        limit = self.ncols if limit is None else limit
        pivot_set = set(self.pivots)
        free = [c for c in range(limit) if c not in pivot_set]
        k = np.zeros((self.ncols, len(free)), dtype=self.dtype)
        for t, f in enumerate(free):
            k[f, t] = 1
        if self.pivots and free:
            k[self.pivots, :] = (-self.basis[:, free]) % self.p
        return k[:limit]


def rank_mod_p(a, p):
    a = np.asarray(a)
    if a.ndim != 2 or not a.shape[0] or not a.shape[1]:
        return 0
    return RowEchelonModP(a.shape[1], p).add(a).rank


def _solve_prime_power(a, b, p, k):
    n = a.shape[1]
    if k == 1:
        ech = RowEchelonModP(n + 1, p)
        if a.shape[0]:
            ech.add(np.hstack([a, np.asarray(b).reshape(-1, 1)]))
        kernel = as_mod_array(ech.kernel_basis(limit=n), p)
        if n in ech.pivots:
            return None, kernel
        x = np.zeros(n, dtype=object)
        for i, c in enumerate(ech.pivots):
            x[c] = int(ech.basis[i, n])
        return as_mod_array(x, p), kernel

    q = p ** k
    lower = p ** (k - 1)
    x0, k0 = _solve_prime_power(as_mod_array(a, p), as_mod_array(b, p), p, 1)
    if x0 is None:
        return None, _solve_prime_power(a, np.zeros(a.shape[0], dtype=np.int64), p, k)[1]
    ao = np.asarray(a, dtype=object)
    k0o = np.asarray(k0, dtype=object)
    # A*K0 and b - A*x0 vanish mod p; divide that factor out and solve one level down:
    c = ((ao @ k0o) % q) // p if k0o.shape[1] else np.zeros((a.shape[0], 0), dtype=object)
    r = ((np.asarray(b, dtype=object) - ao @ np.asarray(x0, dtype=object)) % q) // p
    augmented = np.hstack([ao, c]) if a.shape[0] else np.zeros((0, n + k0o.shape[1]), dtype=object)
    y, ky = _solve_prime_power(as_mod_array(augmented, lower), as_mod_array(r, lower), p, k - 1)
    ky = np.asarray(ky, dtype=object)
    lifted = (k0o @ ky[n:] + p * ky[:n]) % q
    kernel = as_mod_array(np.hstack([lifted, (lower * k0o) % q]), q)
    if y is None:
        return None, kernel
    y = np.asarray(y, dtype=object)
    x = (np.asarray(x0, dtype=object) + k0o @ y[n:] + p * y[:n]) % q
    return as_mod_array(x, q), kernel


def solve_mod(a, b, modulus):
    '''
    Array-level solver for a x = b over Z/modulus.  Returns (particular, kernel) where particular is
    None for an inconsistent system and kernel is an n-by-t array whose columns generate the
    solutions of the homogeneous system as a Z/modulus-module.
    '''
    a = np.asarray(a)
    if a.ndim != 2:
        raise InvalidArgument('coefficient array must be 2-dimensional, found shape %s' % (a.shape,))
    b = np.asarray(b).reshape(-1)
    if b.shape[0] != a.shape[0]:
        raise InvalidArgument('right-hand side of length %d does not fit %d equations' % (b.shape[0], a.shape[0]))
    n = a.shape[1]
    particular = np.zeros(n, dtype=object)
    consistent = True
    kernels = []
    for p, k, q, e in crt_idempotents(modulus):
        x, kernel = _solve_prime_power(as_mod_array(a, q), as_mod_array(b, q), p, k)
        if x is None:
            consistent = False
        else:
            particular = (particular + e * np.asarray(x, dtype=object)) % modulus
        kernels.append((e * np.asarray(kernel, dtype=object)) % modulus)
    kernel = np.hstack(kernels) if kernels else np.zeros((n, 0), dtype=object)
    return (as_mod_array(particular, modulus) if consistent else None), as_mod_array(kernel, modulus)


def kernel_mod(a, modulus):
    a = np.asarray(a)
    return solve_mod(a, np.zeros(a.shape[0], dtype=np.int64), modulus)[1]


class AffineSolution(object):
    '''
    The solution set of A x = b over Z/L: a particular solution (None when there is none) plus
    generators of the kernel {x : A x = 0}.
    '''

    def __init__(self, modulus, nvars, particular, kernel):
        self.modulus = modulus
        self.nvars = nvars
        self.particular = particular
        self.kernel = kernel

    @property
    def is_empty(self):
        return self.particular is None

    def kernel_matrix(self):
        if not self.kernel:
            return ZMatrix.zeros(self.nvars, 0, self.modulus)
        return ZMatrix.from_array(np.array(self.kernel, dtype=object).T, self.modulus)

    def kernel_order(self):
        'Number of solutions of the homogeneous system.'
        return submodule_order(self.kernel, self.nvars, self.modulus)

    def solution_count(self):
        return 0 if self.is_empty else self.kernel_order()

    def __repr__(self):
        return 'AffineSolution(modulus=%d, particular=%r, kernel=%r)' % (self.modulus, self.particular, self.kernel)


def solution_space_mod(a, b):
    if not isinstance(a, ZMatrix) or not a.modulus:
        raise InvalidArgument('solution_space_mod needs a ZMatrix over Z/L, found %r' % (a,))
    b = [int(x) for x in b]
    if len(b) != a.rows:
        raise InvalidArgument('right-hand side of length %d does not fit %d equations' % (len(b), a.rows))
    x, kernel = solve_mod(a.array, np.array(b, dtype=object), a.modulus)
    particular = None if x is None else tuple(int(v) for v in x)
    kernel = tuple(tuple(int(v) for v in col) for col in np.asarray(kernel).T if np.any(col))
    return AffineSolution(a.modulus, a.cols, particular, kernel)


def submodule_structure(generators, n, modulus):
    '''
    Abstract structure of the Z/modulus-submodule of (Z/modulus)^n spanned by the given vectors:
    Z^t modulo the relations among the generators.
    '''
    generators = [list(v) for v in generators]
    if not generators:
        return AbelianGroupStructure.trivial()
    if any(len(v) != n for v in generators):
        raise InvalidArgument('generators must all have length %d' % (n,))
    g = np.array(generators, dtype=object).T
    relations = kernel_mod(as_mod_array(g, modulus), modulus).T
    return abelian_quotient(len(generators), [list(r) for r in relations], modulus)


def submodule_order(generators, n, modulus):
    'Number of elements of the Z/modulus-submodule of (Z/modulus)^n spanned by `generators`.'
    generators = [list(v) for v in generators]
    if not generators:
        return 1
    return modulus ** n // abelian_quotient(n, generators, modulus).order


def inverse_mod_array(a, modulus):
    '''
    Inverse of a square integer array over Z/modulus: row reduction mod each prime, Newton lifting
    X <- X(2I - AX) up to the full prime power, then CRT recombination.
    '''
    a = np.asarray(a)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise InvalidArgument('only square arrays have inverses, found shape %s' % (a.shape,))
    result = np.zeros((n, n), dtype=object)
    identity = np.eye(n, dtype=np.int64)
    for p, k, q, e in crt_idempotents(modulus):
        ech = RowEchelonModP(2 * n, p).add(np.hstack([as_mod_array(a, p), identity]))
        if sorted(ech.pivots) != list(range(n)):
            raise InvalidArgument('matrix is not invertible modulo %d' % (p,))
        x = np.zeros((n, n), dtype=object)
        for i, c in enumerate(ech.pivots):
            x[c] = ech.basis[i, n:]
        precision = 1
        ao = np.asarray(a, dtype=object)
        while precision < k:
            precision = min(2 * precision, k)
            m = p ** precision
            x = (x @ (2 * identity.astype(object) - (ao @ x) % m)) % m
        if np.any((ao @ x - identity) % q):
            raise SpcgtInternalError('Newton lifting of a matrix inverse failed modulo %d' % (q,))
        result = (result + e * x) % modulus
    return as_mod_array(result, modulus)


class RowSpaceAccumulator(object):
    '''
    Streams homogeneous linear constraints over Z/p^k and reports their common solution space.

    Over a prime field the rows go straight into a RowEchelonModP; over a higher prime power the
    distinct rows are kept and solved by lifting once everything is in.
    '''

    def __init__(self, ncols, p, k):
        self.ncols = ncols
        self.p = p
        self.k = k
        self.q = p ** k
        self.field = RowEchelonModP(ncols, p) if k == 1 else None
        self.rows = np.zeros((0, ncols), dtype=np.int64)
        self.seen = 0

    @property
    def is_saturated(self):
        'Whether the only common solution left is zero.'
        return self.field is not None and self.field.is_full

    def add(self, rows):
        rows = as_mod_array(rows, self.q)
        if rows.ndim == 1:
            rows = rows.reshape(1, -1)
        self.seen += rows.shape[0]
        rows = rows[np.any(rows != 0, axis=1)]
        if not len(rows):
            return self
        if self.field is not None:
            self.field.add(rows)
            return self
        rows = np.unique(rows, axis=0)
        self.rows = np.unique(np.vstack([self.rows, rows]), axis=0)
        return self

    def kernel(self):
        if self.field is not None:
            return as_mod_array(self.field.kernel_basis(), self.q)
        if not len(self.rows):
            return as_mod_array(np.eye(self.ncols, dtype=np.int64), self.q)
        log.debug('Lifting %d distinct constraints over Z/%d', len(self.rows), self.q)
        return kernel_mod(self.rows, self.q)
