"""
spcgt/linalg/zmatrix.py

Dense exact matrices over Z (modulus 0) or Z/L.
"""

from spcgt.utils import InvalidArgument
import logging
import numpy as np

log = logging.getLogger(__name__)

INT64_SAFE = 2 ** 62


def fits_int64(modulus, inner):
    'Whether products of reduced entries summed `inner` times stay inside int64.'
    return modulus > 0 and (modulus - 1) ** 2 * max(inner, 1) < INT64_SAFE


def modular_dtype(modulus, inner):
    return np.int64 if fits_int64(modulus, inner) else object


def matmul_mod(a, b, modulus):
    '''
    Exact (a @ b) mod modulus for integer ndarrays whose entries are already reduced.  Falls back
    to Python integers whenever int64 could overflow.
    '''
    if modulus and fits_int64(modulus, a.shape[-1]):
        return (a.astype(np.int64) @ b.astype(np.int64)) % modulus
    r = a.astype(object) @ b.astype(object)
    return r % modulus if modulus else r


def entry_width(modulus):
    'Minimal number of bytes that can hold modulus - 1.'
    return max(1, ((modulus - 1).bit_length() + 7) // 8)


class ZMatrix(object):
    '''
    An immutable rows x cols matrix with exact entries.  With modulus L > 0 every entry is kept in
    [0, L); with modulus 0 entries are arbitrary Python integers.
    '''
    __slots__ = ('rows', 'cols', 'modulus', '_a')

    def __init__(self, entries, modulus=0):
        if modulus < 0:
            raise InvalidArgument('modulus must be nonnegative, found %d' % (modulus,))
        a = np.array(entries, dtype=object)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2:
            raise InvalidArgument('a matrix needs 2 dimensions, found shape %s' % (a.shape,))
        a = np.vectorize(int, otypes=[object])(a) if a.size else a
        if modulus:
            a = a % modulus
            a = a.astype(modular_dtype(modulus, a.shape[1]))
        a.flags.writeable = False
        self.rows, self.cols = a.shape
        self.modulus = modulus
        self._a = a

    @classmethod
    def _wrap(cls, a, modulus):
        m = cls.__new__(cls)
        if modulus:
            a = (a % modulus).astype(modular_dtype(modulus, a.shape[1]))
        else:
            a = a.astype(object)
        a.flags.writeable = False
        m.rows, m.cols = a.shape
        m.modulus = modulus
        m._a = a
        return m

    @classmethod
    def from_array(cls, a, modulus=0):
        return cls._wrap(np.array(a, dtype=object), modulus)

    @classmethod
    def identity(cls, n, modulus=0):
        return cls._wrap(np.eye(n, dtype=np.int64), modulus)

    @classmethod
    def zeros(cls, rows, cols, modulus=0):
        return cls._wrap(np.zeros((rows, cols), dtype=np.int64), modulus)

    @classmethod
    def unit(cls, rows, cols, i, j, modulus=0):
        'The matrix unit E_{i,j} (zero-based indices).'
        a = np.zeros((rows, cols), dtype=np.int64)
        a[i, j] = 1
        return cls._wrap(a, modulus)

    @property
    def array(self):
        'Read-only ndarray view of the entries.'
        return self._a

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def entries(self):
        return tuple(int(x) for x in self._a.flat)

    def to_rows(self):
        return [[int(x) for x in row] for row in self._a]

    def __getitem__(self, ij):
        return int(self._a[ij])

    def _check_compatible(self, other):
        if not isinstance(other, ZMatrix):
            raise InvalidArgument('expected a ZMatrix, found %r' % (other,))
        if other.modulus != self.modulus:
            raise InvalidArgument('modulus mismatch: %d vs %d' % (self.modulus, other.modulus))

    def __matmul__(self, other):
        self._check_compatible(other)
        if self.cols != other.rows:
            raise InvalidArgument('cannot multiply %dx%d by %dx%d' % (self.rows, self.cols, other.rows, other.cols))
        return ZMatrix._wrap(matmul_mod(self._a, other._a, self.modulus), self.modulus)

    def __add__(self, other):
        self._check_compatible(other)
        if self.shape != other.shape:
            raise InvalidArgument('cannot add %s to %s' % (self.shape, other.shape))
        return ZMatrix._wrap(self._a.astype(object) + other._a.astype(object), self.modulus)

    def __sub__(self, other):
        self._check_compatible(other)
        if self.shape != other.shape:
            raise InvalidArgument('cannot subtract %s from %s' % (other.shape, self.shape))
        return ZMatrix._wrap(self._a.astype(object) - other._a.astype(object), self.modulus)

    def __neg__(self):
        return ZMatrix._wrap(-self._a.astype(object), self.modulus)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, np.integer)):
            return NotImplemented
        return ZMatrix._wrap(self._a.astype(object) * int(scalar), self.modulus)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise InvalidArgument('negative matrix powers are not supported')
        result = ZMatrix.identity(self.rows, self.modulus)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def transpose(self):
        return ZMatrix._wrap(self._a.T.copy(), self.modulus)

    T = property(transpose)

    def reduce(self, modulus):
        'Entrywise reduction to Z/modulus; allowed from Z or from any multiple of modulus.'
        if modulus <= 0:
            raise InvalidArgument('cannot reduce to modulus %d' % (modulus,))
        if self.modulus and self.modulus % modulus:
            raise InvalidArgument('cannot reduce from Z/%d to Z/%d' % (self.modulus, modulus))
        return ZMatrix._wrap(self._a.astype(object) % modulus, modulus)

    def lift(self):
        'The same entries viewed as an integral matrix.'
        return ZMatrix._wrap(self._a.astype(object), 0)

    def apply(self, vector):
        'Matrix times column vector, returned as a tuple.'
        v = np.array([int(x) for x in vector], dtype=object).reshape(-1, 1)
        if v.shape[0] != self.cols:
            raise InvalidArgument('vector of length %d does not fit a %dx%d matrix' % (v.shape[0], self.rows, self.cols))
        r = self._a.astype(object) @ v
        if self.modulus:
            r = r % self.modulus
        return tuple(int(x) for x in r.flat)

    def is_zero(self):
        return not np.any(self._a != 0)

    def is_identity(self):
        return self.rows == self.cols and bool(np.all(self._a == np.eye(self.rows, dtype=np.int64)))

    def canonical_bytes(self):
        '''
        Row-major, entries reduced to [0, L), fixed-width little-endian, width = minimal bytes for
        L - 1.  Only defined over Z/L.
        '''
        if not self.modulus:
            raise InvalidArgument('canonical encoding needs a modulus')
        width = entry_width(self.modulus)
        return b''.join(int(x).to_bytes(width, 'little') for x in self._a.flat)

    def __eq__(self, other):
        if not isinstance(other, ZMatrix):
            return NotImplemented
        return (self.modulus == other.modulus and self.shape == other.shape
                and bool(np.all(self._a.astype(object) == other._a.astype(object))))

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.modulus, self.shape, self.entries))

    def __repr__(self):
        return 'ZMatrix(%r, modulus=%d)' % (self.to_rows(), self.modulus)
