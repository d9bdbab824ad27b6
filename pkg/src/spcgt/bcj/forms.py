"""
spcgt/bcj/forms.py

Z/2 quadratic forms on H_1(Sigma_g; Z/2) refining the intersection pairing, their Arf invariants,
and the action of Sp_2g(Z/2) on them.

Vectors of (Z/2)^2g are bitmasks in the standard order a_1, ..., a_g, b_1, ..., b_g: bit k is the
k-th basis vector, a_i is bit i and b_i is bit g + i.
"""

from spcgt.groups.symplectic import symplectic_generators
from spcgt.utils import InvalidArgument, require_int
import collections
import logging

log = logging.getLogger(__name__)

MAX_TABLE_GENUS = 6


def check_table_genus(g):
    require_int('g', g, 1)
    if g > MAX_TABLE_GENUS:
        raise InvalidArgument('tables of quadratic forms are only built for g <= %d, found g=%d' % (MAX_TABLE_GENUS, g))


def mask_of(vector):
    'Bitmask of a 0/1 vector in the standard order.'
    mask = 0
    for k, x in enumerate(vector):
        if int(x) % 2:
            mask |= 1 << k
    return mask


def intersection(x, y, g):
    'i(x, y) mod 2 for bitmasks x and y.'
    low = (1 << g) - 1
    return bin((x & low) & (y >> g)).count('1') % 2 ^ bin((x >> g) & (y & low)).count('1') % 2


class QuadraticForm(object):
    '''
    f : (Z/2)^2g -> Z/2 with f(x + y) = f(x) + f(y) + i(x, y), fixed by its values on the standard
    basis, stored in the order f(a_1), ..., f(a_g), f(b_1), ..., f(b_g).
    '''
    __slots__ = ('g', 'basis_values', '_mask')

    def __init__(self, g, basis_values):
        require_int('g', g, 1)
        basis_values = tuple(int(v) for v in basis_values)
        if len(basis_values) != 2 * g or any(v not in (0, 1) for v in basis_values):
            raise InvalidArgument('a quadratic form for g=%d needs %d values in {0, 1}, found %r' % (
                g, 2 * g, basis_values))
        self.g = g
        self.basis_values = basis_values
        self._mask = mask_of(basis_values)

    @classmethod
    def from_interleaved(cls, g, values):
        'Builds a form from the values in the order f(a_1), f(b_1), ..., f(a_g), f(b_g).'
        values = list(values)
        if len(values) != 2 * g:
            raise InvalidArgument('expected %d interleaved values, found %d' % (2 * g, len(values)))
        return cls(g, values[0::2] + values[1::2])

    @classmethod
    def from_mask(cls, g, mask):
        return cls(g, [(mask >> k) & 1 for k in range(2 * g)])

    @property
    def mask(self):
        return self._mask

    def __call__(self, x):
        return evaluate_form(self, x)

    def __eq__(self, other):
        if not isinstance(other, QuadraticForm):
            return NotImplemented
        return self.g == other.g and self._mask == other._mask

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.g, self._mask))

    def __repr__(self):
        return 'QuadraticForm(g=%d, %s)' % (self.g, ''.join(str(v) for v in self.basis_values))


def evaluate_form(f, x, order=None):
    '''
    f(x) for x given as a bitmask or a 0/1 vector.  By default the closed expansion
    sum_k x_k f(e_k) + sum_i x_(a_i) x_(b_i) is used; with `order` (a permutation of range(2g)) the
    value is instead built up one basis vector at a time in that order, applying the pairing
    correction at every step.
    '''
    g = f.g
    if not isinstance(x, int):
        x = mask_of(x)
    if x < 0 or x >> (2 * g):
        raise InvalidArgument('vector %r does not lie in (Z/2)^%d' % (x, 2 * g))
    if order is None:
        low = (1 << g) - 1
        return (bin(x & f.mask).count('1') + bin((x & low) & (x >> g)).count('1')) % 2
    if sorted(order) != list(range(2 * g)):
        raise InvalidArgument('expansion order must be a permutation of 0..%d' % (2 * g - 1,))
    value, partial = 0, 0
    for k in order:
        if not (x >> k) & 1:
            continue
        e = 1 << k
        value ^= f.basis_values[k] ^ intersection(partial, e, g)
        partial |= e
    return value


def arf(f):
    'f(a_1) f(b_1) + ... + f(a_g) f(b_g) mod 2.'
    g = f.g
    return sum(f.basis_values[i] * f.basis_values[g + i] for i in range(g)) % 2


def all_forms(g):
    'Every quadratic form for genus g, ordered by bitmask.'
    check_table_genus(g)
    return [QuadraticForm.from_mask(g, mask) for mask in range(1 << (2 * g))]


def arf_zero_forms(g):
    return [f for f in all_forms(g) if not arf(f)]


def _inverse_columns(x, g):
    'Columns of X^-1 = Omega X^t Omega over Z/2, as bitmasks.'
    a = [[int(v) % 2 for v in row] for row in x.array]
    n = 2 * g

    def swap(i):
        return i + g if i < g else i - g

    # (Omega X^t Omega)[r][c] = X[swap(c)][swap(r)] mod 2.
    return [sum(a[swap(c)][swap(r)] << r for r in range(n)) for c in range(n)]


def act(x, f):
    '(X.f)(v) = f(X^-1 v) for X in Sp_2g(Z/2).'
    g = f.g
    if x.shape != (2 * g, 2 * g):
        raise InvalidArgument('matrix of shape %s does not act on forms of genus %d' % (x.shape, g))
    return QuadraticForm(g, [evaluate_form(f, col) for col in _inverse_columns(x, g)])


OrbitReport = collections.namedtuple('OrbitReport', ['g', 'orbits', 'orbit_arfs', 'separates'])


def orbit_report_json(report):
    return {
        'g': report.g,
        'orbit_arfs': list(report.orbit_arfs),
        'orbit_sizes': [len(o) for o in report.orbits],
        'separates': report.separates,
    }


def orbit_arf_classification(g):
    '''
    Sp_2g(Z/2)-orbits on all quadratic forms, found as connected components under the generators,
    and whether they are exactly the fibers of the Arf invariant.  Orbits are listed by their
    smallest bitmask.
    '''
    require_int('g', g, 1)
    if g > 3:
        raise InvalidArgument('orbit classification is only run for g <= 3, found g=%d' % (g,))
    forms = all_forms(g)
    generators = symplectic_generators(g, 2)
    parent = list(range(len(forms)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for x in generators:
        for f in forms:
            a, b = find(f.mask), find(act(x, f).mask)
            if a != b:
                parent[max(a, b)] = min(a, b)

    members = collections.OrderedDict()
    for f in forms:
        members.setdefault(find(f.mask), []).append(f)
    orbits = list(members.values())
    orbit_arfs = []
    constant = True
    for orbit in orbits:
        values = set(arf(f) for f in orbit)
        constant = constant and len(values) == 1
        orbit_arfs.append(min(values))
    separates = constant and len(set(orbit_arfs)) == len(orbits)
    log.info('g=%d: %d orbits of sizes %s, Arf invariants %s', g, len(orbits), [len(o) for o in orbits], orbit_arfs)
    return OrbitReport(g, orbits, tuple(orbit_arfs), separates)
