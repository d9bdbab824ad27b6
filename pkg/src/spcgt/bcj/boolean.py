"""
spcgt/bcj/boolean.py

The Boolean polynomial algebra B(2g): square-free Z/2 polynomials in the symbols x_1, ..., x_2g of
the standard basis vectors, its evaluation into functions on quadratic forms, and the ranks of the
filtration pieces B_n(2g) and of their restrictions to the Arf-invariant-zero forms.
"""

from spcgt.bcj.forms import all_forms, arf, arf_zero_forms, check_table_genus, evaluate_form, mask_of
from spcgt.linalg import rank_mod_p
from spcgt.utils import InvalidArgument, require_int
import itertools
import logging
import numpy as np

log = logging.getLogger(__name__)


def monomial_key(mask):
    'Graded lexicographic: by degree, then by the sorted variable indices.'
    return (bin(mask).count('1'), [k for k in range(mask.bit_length()) if (mask >> k) & 1])


class BooleanPoly(object):
    '''
    An element of B(2g) in normal form: a set of monomials, each a bitmask of the variables it
    contains, with coefficient 1.  x^2 = x holds automatically because a monomial is a set.
    '''
    __slots__ = ('g', 'monomials')

    def __init__(self, g, monomials=()):
        require_int('g', g, 1)
        terms = set()
        for mono in monomials:
            mono = int(mono)
            if mono < 0 or mono >> (2 * g):
                raise InvalidArgument('monomial %r uses variables outside x_1..x_%d' % (mono, 2 * g))
            terms ^= {mono}
        self.g = g
        self.monomials = frozenset(terms)

    @classmethod
    def zero(cls, g):
        return cls(g)

    @classmethod
    def one(cls, g):
        return cls(g, [0])

    @classmethod
    def variable(cls, g, k):
        'x_(k+1), the symbol of the k-th standard basis vector (zero-based k).'
        if not 0 <= k < 2 * g:
            raise InvalidArgument('variable index %d out of range for g=%d' % (k, g))
        return cls(g, [1 << k])

    def _check(self, other):
        if not isinstance(other, BooleanPoly) or other.g != self.g:
            raise InvalidArgument('cannot combine %r with %r' % (self, other))

    def __add__(self, other):
        self._check(other)
        return BooleanPoly(self.g, self.monomials ^ other.monomials)

    def __mul__(self, other):
        return bcj_product(self, other)

    @property
    def degree(self):
        return max([bin(m).count('1') for m in self.monomials] or [-1])

    def is_zero(self):
        return not self.monomials

    def sorted_monomials(self):
        return sorted(self.monomials, key=monomial_key)

    def evaluate(self, f):
        'The value at a quadratic form f: each x_k becomes f(e_k).'
        return sum(1 for m in self.monomials if m & f.mask == m) % 2

    def __eq__(self, other):
        if not isinstance(other, BooleanPoly):
            return NotImplemented
        return self.g == other.g and self.monomials == other.monomials

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.g, self.monomials))

    def __str__(self):
        if not self.monomials:
            return '0'
        terms = []
        for m in self.sorted_monomials():
            terms.append('*'.join('x%d' % (k + 1,) for k in monomial_key(m)[1]) or '1')
        return ' + '.join(terms)

    def __repr__(self):
        return 'BooleanPoly(g=%d, %s)' % (self.g, self)


def bcj_product(p, q):
    'Product in B(2g): monomials multiply by union of their variables, coefficients add mod 2.'
    p._check(q)
    terms = set()
    for a in p.monomials:
        for b in q.monomials:
            terms ^= {a | b}
    return BooleanPoly(p.g, terms)


def symbol_of_class(x, g):
    '''
    The symbol of a nonzero class x, expanded through the sum relation into the basis symbols: the
    sum of x_k over the basis vectors in x, plus the constant counting the hyperbolic pairs a_i, b_i
    that x contains.
    '''
    if not isinstance(x, int):
        x = mask_of(x)
    require_int('g', g, 1)
    if x < 0 or x >> (2 * g):
        raise InvalidArgument('vector %r does not lie in (Z/2)^%d' % (x, 2 * g))
    if not x:
        raise InvalidArgument('the zero class has no symbol')
    low = (1 << g) - 1
    terms = [1 << k for k in range(2 * g) if (x >> k) & 1]
    if bin((x & low) & (x >> g)).count('1') % 2:
        terms.append(0)
    return BooleanPoly(g, terms)


def arf_polynomial(g):
    'sum_i x_(a_i) x_(b_i), whose value at every form is its Arf invariant.'
    return BooleanPoly(g, [(1 << i) | (1 << (g + i)) for i in range(g)])


def monomials_up_to(g, n):
    'Every monomial of degree at most n, in graded lexicographic order.'
    result = []
    for degree in range(n + 1):
        for combo in itertools.combinations(range(2 * g), degree):
            result.append(sum(1 << k for k in combo))
    return result


def evaluation_matrix(monomials, forms):
    'Rows are monomials, columns are forms; entry 1 when the monomial evaluates to 1.'
    masks = np.array([f.mask for f in forms], dtype=np.int64)
    rows = [((masks & m) == m).astype(np.int64) for m in monomials]
    return np.array(rows, dtype=np.int64).reshape(len(monomials), len(forms))


def _check_degree(g, n):
    check_table_genus(g)
    require_int('n', n, 0)
    if n > 2 * g:
        raise InvalidArgument('degree %d exceeds the number of variables 2g=%d' % (n, 2 * g))


def dim_Bn(g, n):
    '''
    (dimension of B_n(2g), rank of its evaluation into functions on all quadratic forms).  The two
    agree exactly when evaluation is injective on B_n(2g).
    '''
    _check_degree(g, n)
    monomials = monomials_up_to(g, n)
    rank = rank_mod_p(evaluation_matrix(monomials, all_forms(g)), 2)
    log.debug('B_%d(%d): dimension %d, evaluation rank %d', n, 2 * g, len(monomials), rank)
    return len(monomials), rank


def dim_Bbar(g, n):
    'Dimension of the restriction of B_n(2g) to the quadratic forms of Arf invariant zero.'
    _check_degree(g, n)
    rank = rank_mod_p(evaluation_matrix(monomials_up_to(g, n), arf_zero_forms(g)), 2)
    log.debug('Restricted B_%d(%d) has dimension %d', n, 2 * g, rank)
    return rank


def check_ring_homomorphism(p, q, forms=None):
    'Whether (pq)(f) = p(f) q(f) for every form f (all forms of the genus by default).'
    forms = all_forms(p.g) if forms is None else forms
    product = bcj_product(p, q)
    return all(product.evaluate(f) == p.evaluate(f) * q.evaluate(f) for f in forms)


def check_symbols(g):
    'Whether the symbol of every nonzero class evaluates to f(x) at every form.'
    forms = all_forms(g)
    for x in range(1, 1 << (2 * g)):
        s = symbol_of_class(x, g)
        if any(s.evaluate(f) != evaluate_form(f, x) for f in forms):
            return False
    return True


def check_arf_polynomial(g):
    poly = arf_polynomial(g)
    return all(poly.evaluate(f) == arf(f) for f in all_forms(g))
