"""
spcgt/linalg/snf.py

Smith normal form over Z and the finitely generated abelian groups it describes.
"""

from spcgt.linalg.zmatrix import ZMatrix
from spcgt.utils import InvalidArgument, SpcgtInternalError
import functools
import logging
import math

log = logging.getLogger(__name__)


def xgcd(a, b):
    'Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.'
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _identity_rows(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class _SmithState(object):
    '''
    In-place Smith reduction of a list-of-lists integer matrix.  Row operations are mirrored into
    U (and U^-1), column operations into V (and V^-1), so that U*A*V = D at the end.
    '''

    def __init__(self, rows, track):
        self.a = [list(r) for r in rows]
        self.m = len(self.a)
        self.n = len(self.a[0]) if self.a else 0
        self.track = track
        if track:
            self.u = _identity_rows(self.m)
            self.u_inv = _identity_rows(self.m)
            self.v = _identity_rows(self.n)
            self.v_inv = _identity_rows(self.n)

    # row_i += c * row_k
    def add_row(self, i, k, c):
        a = self.a
        ri, rk = a[i], a[k]
        for j in range(self.n):
            if rk[j]:
                ri[j] += c * rk[j]
        if self.track:
            ui, uk = self.u[i], self.u[k]
            for j in range(self.m):
                if uk[j]:
                    ui[j] += c * uk[j]
            for row in self.u_inv:
                if row[i]:
                    row[k] -= c * row[i]

    # col_j += c * col_k
    def add_col(self, j, k, c):
        for row in self.a:
            if row[k]:
                row[j] += c * row[k]
        if self.track:
            for row in self.v:
                if row[k]:
                    row[j] += c * row[k]
            vk, vj = self.v_inv[k], self.v_inv[j]
            for i in range(self.n):
                if vj[i]:
                    vk[i] -= c * vj[i]

    def swap_rows(self, i, k):
        if i == k:
            return
        a = self.a
        a[i], a[k] = a[k], a[i]
        if self.track:
            self.u[i], self.u[k] = self.u[k], self.u[i]
            for row in self.u_inv:
                row[i], row[k] = row[k], row[i]

    def swap_cols(self, j, k):
        if j == k:
            return
        for row in self.a:
            row[j], row[k] = row[k], row[j]
        if self.track:
            for row in self.v:
                row[j], row[k] = row[k], row[j]
            self.v_inv[j], self.v_inv[k] = self.v_inv[k], self.v_inv[j]

    def negate_row(self, i):
        self.a[i] = [-x for x in self.a[i]]
        if self.track:
            self.u[i] = [-x for x in self.u[i]]
            for row in self.u_inv:
                row[i] = -row[i]

    def _smallest_in_block(self, t):
        best = None
        for i in range(t, self.m):
            row = self.a[i]
            for j in range(t, self.n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        return best
        return best

    def _smallest_in_cross(self, t):
        best = None
        for i in range(t, self.m):
            x = self.a[i][t]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, t)
        for j in range(t + 1, self.n):
            x = self.a[t][j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), t, j)
        return best

    def _place(self, t, best):
        _, i, j = best
        self.swap_rows(t, i)
        self.swap_cols(t, j)

    def run(self):
        a = self.a
        for t in range(min(self.m, self.n)):
            best = self._smallest_in_block(t)
            if best is None:
                break
            self._place(t, best)
            while True:
                p = a[t][t]
                dirty = False
                for i in range(t + 1, self.m):
                    if a[i][t]:
                        self.add_row(i, t, -(a[i][t] // p))
                        dirty = dirty or bool(a[i][t])
                for j in range(t + 1, self.n):
                    if a[t][j]:
                        self.add_col(j, t, -(a[t][j] // p))
                        dirty = dirty or bool(a[t][j])
                if dirty:
                    self._place(t, self._smallest_in_cross(t))
                    continue
                # Row and column are clear; the pivot must also divide the rest of the block:
                offender = None
                for i in range(t + 1, self.m):
                    if any(x % p for x in a[i][t + 1:]):
                        offender = i
                        break
                if offender is None:
                    break
                self.add_row(t, offender, 1)
            if a[t][t] < 0:
                self.negate_row(t)
        return self

    def diagonal(self):
        return [self.a[i][i] for i in range(min(self.m, self.n))]


def smith_normal_form(m, with_inverses=False):
    '''
    Smith normal form of an integral ZMatrix: returns (D, U, V) with U*M*V = D, D diagonal with
    d_1 | d_2 | ..., and U, V unimodular.  With `with_inverses`, also returns U^-1 and V^-1.

    Pivots are chosen with minimal absolute value each round to keep coefficient growth down.
    '''
    if m.modulus:
        raise InvalidArgument('smith_normal_form needs an integral matrix (modulus 0), found modulus %d' % (m.modulus,))
    state = _SmithState(m.to_rows(), track=True).run()
    d = ZMatrix(state.a) if m.rows and m.cols else ZMatrix.zeros(m.rows, m.cols)
    u = ZMatrix(state.u) if m.rows else ZMatrix.zeros(0, 0)
    v = ZMatrix(state.v) if m.cols else ZMatrix.zeros(0, 0)
    if not with_inverses:
        return d, u, v
    u_inv = ZMatrix(state.u_inv) if m.rows else ZMatrix.zeros(0, 0)
    v_inv = ZMatrix(state.v_inv) if m.cols else ZMatrix.zeros(0, 0)
    return d, u, v, u_inv, v_inv


def smith_diagonal(rows, ncols):
    'Just the Smith diagonal of an integer list-of-lists matrix, without transforms.'
    if not rows or not ncols:
        return []
    return _SmithState(rows, track=False).run().diagonal()


def prime_factorization(n):
    'Trial division; the moduli spcgt meets are small.'
    if n < 1:
        raise InvalidArgument('cannot factor %d' % (n,))
    result = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            result.append((p, k))
        p += 1 if p == 2 else 2
    if n > 1:
        result.append((n, 1))
    return result


class AbelianGroupStructure(object):
    '''
    A finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k and
    every d_i >= 2.  Immutable and hashable.
    '''
    __slots__ = ('invariant_factors', 'free_rank')

    def __init__(self, invariant_factors=(), free_rank=0):
        factors = tuple(int(d) for d in invariant_factors)
        if any(d < 2 for d in factors):
            raise InvalidArgument('invariant factors must be >= 2, found %s' % (factors,))
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise InvalidArgument('invariant factors must form a divisibility chain, found %s' % (factors,))
        if free_rank < 0:
            raise InvalidArgument('free rank must be nonnegative, found %d' % (free_rank,))
        object.__setattr__(self, 'invariant_factors', factors)
        object.__setattr__(self, 'free_rank', int(free_rank))

    def __setattr__(self, key, value):
        raise AttributeError('AbelianGroupStructure is immutable')

    @classmethod
    def trivial(cls):
        return cls()

    @classmethod
    def from_cyclic_orders(cls, orders):
        '''
        Normalizes an arbitrary direct sum of cyclic groups; an order of 0 stands for Z and an
        order of 1 is the trivial group.
        '''
        orders = [abs(int(d)) for d in orders]
        relations = [[d if i == j else 0 for j in range(len(orders))] for i, d in enumerate(orders)]
        return abelian_quotient(len(orders), relations)

    @property
    def is_trivial(self):
        return not self.invariant_factors and not self.free_rank

    @property
    def is_finite(self):
        return not self.free_rank

    @property
    def order(self):
        'The order of a finite group, or None for an infinite one.'
        if self.free_rank:
            return None
        return functools.reduce(lambda x, y: x * y, self.invariant_factors, 1)

    @property
    def length(self):
        'Composition length: the number of prime factors of the order, counted with multiplicity.'
        if self.free_rank:
            raise InvalidArgument('an infinite group has no finite composition length')
        return sum(k for d in self.invariant_factors for _, k in prime_factorization(d))

    def direct_sum(self, *others):
        orders = list(self.invariant_factors) + [0] * self.free_rank
        for o in others:
            orders += list(o.invariant_factors) + [0] * o.free_rank
        return AbelianGroupStructure.from_cyclic_orders(orders)

    def dual(self):
        'Hom(A, Q/Z) of a finite group has the same invariant factors.'
        if self.free_rank:
            raise InvalidArgument('the Pontryagin dual of an infinite group is not finitely generated')
        return self

    def symbol(self):
        if self.is_trivial:
            return '0'
        parts = []
        run = []
        for d in list(self.invariant_factors) + [None]:
            if run and d != run[0]:
                parts.append('Z/%d' % run[0] if len(run) == 1 else '(Z/%d)^%d' % (run[0], len(run)))
                run = []
            if d is not None:
                run.append(d)
        if self.free_rank:
            parts.append('Z' if self.free_rank == 1 else 'Z^%d' % self.free_rank)
        return ' + '.join(parts)

    def to_json(self):
        return {
            'free_rank': self.free_rank,
            'invariant_factors': list(self.invariant_factors),
            'symbol': self.symbol(),
        }

    def __eq__(self, other):
        if not isinstance(other, AbelianGroupStructure):
            return NotImplemented
        return self.invariant_factors == other.invariant_factors and self.free_rank == other.free_rank

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.invariant_factors, self.free_rank))

    def __repr__(self):
        return 'AbelianGroupStructure(%r, free_rank=%d)' % (list(self.invariant_factors), self.free_rank)


class LatticeAccumulator(object):
    '''
    Incrementally maintains a triangular generating set of a lattice in Z^n, so that any number of
    relations can be streamed in while the working set stays at most n rows.

    With a modulus M the lattice is understood to contain M*Z^n and entries are reduced mod M.
    Without one, the accumulator switches to the index of the lattice as its modulus as soon as the
    lattice has full rank.
    '''

    def __init__(self, n, modulus=0):
        self.n = n
        self.modulus = modulus
        self.pivots = {}
        if modulus:
            for c in range(n):
                self.pivots[c] = [modulus if j == c else 0 for j in range(n)]

    def _reduce(self, row, start):
        m = self.modulus
        if m:
            for j in range(start, self.n):
                row[j] %= m
        return row

    def add(self, relation):
        if len(relation) != self.n:
            raise InvalidArgument('relation of length %d does not fit rank %d' % (len(relation), self.n))
        row = self._reduce([int(x) for x in relation], 0)
        for c in range(self.n):
            x = row[c]
            if not x:
                continue
            b = self.pivots.get(c)
            if b is None:
                if x < 0:
                    row = [-y for y in row]
                self.pivots[c] = row
                break
            p = b[c]
            if x % p == 0:
                q = x // p
                row = [ri - q * bi for ri, bi in zip(row, b)]
            else:
                g, s, t = xgcd(p, x)
                u, v = p // g, x // g
                new_b = [s * bi + t * ri for bi, ri in zip(b, row)]
                row = [u * ri - v * bi for bi, ri in zip(b, row)]
                self.pivots[c] = self._reduce(new_b, c + 1)
            self._reduce(row, c + 1)
        self._tighten()

    def _tighten(self):
        if len(self.pivots) < self.n or not self.n:
            return
        index = functools.reduce(lambda x, y: x * y, (abs(r[c]) for c, r in self.pivots.items()), 1)
        new_modulus = math.gcd(self.modulus, index) if self.modulus else index
        if new_modulus != self.modulus:
            self.modulus = new_modulus
            for c, r in self.pivots.items():
                self._reduce(r, c + 1)

    def extend(self, relations):
        for r in relations:
            self.add(r)
        return self

    def generators(self):
        rows = [self.pivots[c] for c in sorted(self.pivots)]
        if self.modulus:
            rows = rows + [[self.modulus if j == c else 0 for j in range(self.n)] for c in range(self.n)]
        return rows

    def structure(self):
        diag = smith_diagonal(self.generators(), self.n)
        nonzero = [abs(d) for d in diag if d]
        factors = [d for d in nonzero if d != 1]
        free_rank = self.n - len(nonzero)
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise SpcgtInternalError('Smith diagonal lost its divisibility chain: %s' % (factors,))
        return AbelianGroupStructure(factors, free_rank)


def abelian_quotient(n, relations, modulus=0):
    '''
    Structure of Z^n / <relations> (additionally modulo modulus*Z^n when a modulus is given).
    The answer does not depend on the order of the relations.
    '''
    if n < 0:
        raise InvalidArgument('rank must be nonnegative, found %d' % (n,))
    return LatticeAccumulator(n, modulus).extend(relations).structure()

