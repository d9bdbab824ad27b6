"""
spcgt/groups/enumeration.py

Finite matrix groups over Z/L given by generators, and their breadth-first enumeration into Cayley
data: every element once, a spanning tree, and the non-tree edges that serve as relators.
"""

from spcgt.constants import *
from spcgt.groups.symplectic import is_symplectic, predicted_order, symplectic_generators, symplectic_inverse
from spcgt.linalg import ZMatrix
from spcgt.utils import *
import logging
import numpy as np

log = logging.getLogger(__name__)

KEY_LIMIT = 2 ** 63


def compact_dtype(modulus):
    'Narrowest signed dtype that holds every residue mod L.'
    if modulus <= 2 ** 7:
        return np.int8
    if modulus <= 2 ** 15:
        return np.int16
    if modulus <= 2 ** 31:
        return np.int32
    return np.int64


def key_powers(n, modulus):
    '''
    Weights L^0, ..., L^(n*n-1) that turn a reduced n x n matrix into a unique int64 key.  Only
    available while L^(n*n) fits in int64.
    '''
    if modulus ** (n * n) >= KEY_LIMIT:
        raise ResourceLimitExceeded('%dx%d matrices over Z/%d do not fit 64-bit element keys' % (n, n, modulus))
    return np.array([modulus ** i for i in range(n * n)], dtype=np.int64)


def element_keys(elements, powers):
    flat = np.asarray(elements).reshape(len(elements), -1).astype(np.int64)
    return flat @ powers


class CayleyData(object):
    '''
    The result of enumerating a group.  Elements are stored in BFS order as an (N, n, n) array;
    element 0 is the identity.  parent[w] and parent_gen[w] describe the spanning tree edge
    parent[w] * s_{parent_gen[w]} = w, and table[u, j] is the index of u * s_j.
    '''

    def __init__(self, elements, parent, parent_gen, table, modulus, from_cache=False):
        self.elements = elements
        self.parent = parent
        self.parent_gen = parent_gen
        self.table = table
        self.modulus = modulus
        self.from_cache = from_cache
        self.powers = key_powers(elements.shape[1], modulus)
        keys = element_keys(elements, self.powers)
        self.key_order = np.argsort(keys, kind='stable').astype(np.int64)
        self.sorted_keys = keys[self.key_order]
        self.level_bounds = level_bounds(parent)

    @property
    def order(self):
        return self.elements.shape[0]

    @property
    def generator_count(self):
        return self.table.shape[1]

    def lookup(self, matrices):
        'Indices of the given (k, n, n) reduced matrices, with -1 for anything not in the group.'
        keys = element_keys(matrices, self.powers)
        pos = np.searchsorted(self.sorted_keys, keys)
        pos = np.minimum(pos, len(self.sorted_keys) - 1)
        found = self.sorted_keys[pos] == keys
        return np.where(found, self.key_order[pos], -1)

    def tree_mask(self):
        'Boolean (N, m) array, true exactly on spanning tree edges.'
        mask = np.zeros(self.table.shape, dtype=bool)
        mask[self.parent[1:], self.parent_gen[1:]] = True
        return mask

    def relator_edges(self):
        '''
        Arrays (u, j, w) over the non-tree edges u * s_j = w, ordered by u then j.  Each such edge
        is the relator tree_word(u) s_j tree_word(w)^-1.
        '''
        u, j = np.nonzero(~self.tree_mask())
        return u, j, self.table[u, j]

    @property
    def relator_count(self):
        return self.table.size - (self.order - 1)


def level_bounds(parent):
    '''
    [(start, end), ...] for each BFS level.  In BFS order the parent array is nondecreasing, so
    each level ends where the parents stop pointing into it.
    '''
    bounds = []
    start, end = 0, 1
    n = len(parent)
    while start < n:
        bounds.append((start, end))
        nxt = int(np.searchsorted(parent, end, side='left'))
        start, end = end, max(nxt, end)
        if start == end:
            break
    return bounds


class GeneratedGroup(object):
    '''
    A finite subgroup of Sp_2g(Z/L) given by an ordered list of generators, optionally with Cayley
    data from enumerate_group().
    '''

    def __init__(self, g, modulus, generators, cayley=None, standard=False):
        require_int('g', g, 1)
        require_int('L', modulus, 2)
        generators = list(generators)
        if not generators:
            raise InvalidArgument('a generated group needs at least one generator')
        for i, x in enumerate(generators):
            if not is_symplectic(x, g, modulus):
                raise InvalidArgument('generator %d is not symplectic modulo %d' % (i, modulus))
        self.g = g
        self.modulus = modulus
        self.generators = tuple(generators)
        self.cayley = cayley
        self.standard = standard

    @classmethod
    def standard_group(cls, g, modulus):
        'Sp_2g(Z/L) with the fixed transvection generators.'
        return cls(g, modulus, symplectic_generators(g, modulus), standard=True)

    def with_cayley(self, cayley):
        return GeneratedGroup(self.g, self.modulus, self.generators, cayley=cayley, standard=self.standard)

    @property
    def dim(self):
        return 2 * self.g

    @property
    def generator_count(self):
        return len(self.generators)

    @property
    def has_cayley(self):
        return self.cayley is not None

    def require_cayley(self):
        if self.cayley is None:
            raise StateError('Sp_%d(Z/%d) has not been enumerated yet' % (2 * self.g, self.modulus))
        return self.cayley

    def predicted_order(self):
        return predicted_order(self.g, self.modulus)

    @property
    def order(self):
        return self.require_cayley().order

    def generator_array(self):
        return np.array([x.array for x in self.generators], dtype=np.int64)

    def element(self, index):
        return ZMatrix.from_array(self.require_cayley().elements[index], self.modulus)

    def index_of(self, x):
        if isinstance(x, ZMatrix):
            if x.modulus != self.modulus or x.shape != (self.dim, self.dim):
                return None
            x = x.array
        i = int(self.require_cayley().lookup(np.asarray(x, dtype=np.int64).reshape(1, self.dim, self.dim))[0])
        return None if i < 0 else i

    def multiply(self, a, b):
        'Indices of elements[a] * elements[b], elementwise over index arrays.'
        cayley = self.require_cayley()
        x = cayley.elements[np.asarray(a)].astype(np.int64)
        y = cayley.elements[np.asarray(b)].astype(np.int64)
        products = np.matmul(x, y) % self.modulus
        indices = cayley.lookup(products)
        if np.any(indices < 0):
            raise SpcgtInternalError('group is not closed under multiplication')
        return indices

    def tree_word(self, index):
        'Generator indices s_j1 ... s_jr with s_j1 * ... * s_jr = elements[index].'
        cayley = self.require_cayley()
        word = []
        while index > 0:
            word.append(int(cayley.parent_gen[index]))
            index = int(cayley.parent[index])
        return tuple(reversed(word))

    def relator_word(self, u, j):
        '''
        The relator of the edge u * s_j as a signed sequence: +(k+1) is s_k and -(k+1) its inverse.
        '''
        w = int(self.require_cayley().table[u, j])
        word = [k + 1 for k in self.tree_word(u)] + [j + 1]
        word += [-(k + 1) for k in reversed(self.tree_word(w))]
        return tuple(word)

    def relator_words(self):
        u, j, _ = self.require_cayley().relator_edges()
        for a, b in zip(u, j):
            yield self.relator_word(int(a), int(b))

    def __repr__(self):
        return 'GeneratedGroup(g=%d, L=%d, generators=%d, enumerated=%s)' % (
            self.g, self.modulus, len(self.generators), self.has_cayley)


def evaluate_word(word, matrices, inverses):
    'Product of the signed word over the given generator images.'
    result = None
    for letter in word:
        x = matrices[letter - 1] if letter > 0 else inverses[-letter - 1]
        result = x if result is None else result @ x
    return result


def evaluate_relator(group, word):
    inverses = [symplectic_inverse(x, group.g) for x in group.generators]
    result = evaluate_word(word, group.generators, inverses)
    return result if result is not None else ZMatrix.identity(group.dim, group.modulus)


def breadth_first_search(generators, modulus, order_cap):
    '''
    Enumerates the group generated by the (m, n, n) int64 array `generators`.  Frontiers are
    multiplied in batches, but new elements receive indices in exactly the order a one-at-a-time
    BFS would assign (frontier order, then generator order).
    '''
    m, n, _ = generators.shape
    dtype = compact_dtype(modulus)
    powers = key_powers(n, modulus)
    per_batch = max(1, SPCGT_ENUMERATION_CHUNK // m)

    identity = np.eye(n, dtype=np.int64)[None]
    seen_keys = element_keys(identity, powers)
    seen_index = np.zeros(1, dtype=np.int64)
    element_blocks = [identity.astype(dtype)]
    parent_blocks = [np.array([-1], dtype=np.int32)]
    gen_blocks = [np.array([-1], dtype=np.int16)]
    table_blocks = []

    frontier = identity.astype(dtype)
    frontier_start = 0
    total = 1
    depth = 0
    while len(frontier):
        level_blocks = []
        for b in range(0, len(frontier), per_batch):
            batch = frontier[b:b + per_batch].astype(np.int64)
            products = (np.matmul(batch[:, None], generators[None]) % modulus).reshape(-1, n, n)
            keys = element_keys(products, powers)

            # First occurrence of each product within this batch, in discovery order:
            _, first = np.unique(keys, return_index=True)
            first.sort()
            pos = np.minimum(np.searchsorted(seen_keys, keys[first]), len(seen_keys) - 1)
            fresh = first[seen_keys[pos] != keys[first]]

            if total + len(fresh) > order_cap:
                raise ResourceLimitExceeded('enumeration exceeded the order cap of %d elements' % (order_cap,))
            fresh_index = np.arange(total, total + len(fresh), dtype=np.int64)
            total += len(fresh)
            level_blocks.append(products[fresh].astype(dtype))
            parent_blocks.append((frontier_start + b + fresh // m).astype(np.int32))
            gen_blocks.append((fresh % m).astype(np.int16))

            merged_keys = np.concatenate([seen_keys, keys[fresh]])
            merged_index = np.concatenate([seen_index, fresh_index])
            order = np.argsort(merged_keys, kind='stable')
            seen_keys, seen_index = merged_keys[order], merged_index[order]

            table_blocks.append(seen_index[np.searchsorted(seen_keys, keys)].reshape(-1, m).astype(np.int32))

        frontier_start += len(frontier)
        frontier = np.concatenate(level_blocks) if level_blocks else np.zeros((0, n, n), dtype=dtype)
        element_blocks.append(frontier)
        depth += 1
        log.info('BFS level %d: %d new elements (%d so far)', depth, len(frontier), total)

    elements = np.concatenate(element_blocks)
    parent = np.concatenate(parent_blocks)
    parent_gen = np.concatenate(gen_blocks)
    table = np.concatenate(table_blocks)
    return CayleyData(elements, parent, parent_gen, table, modulus)


def enumerate_group(group, order_cap=SPCGT_DEFAULT_ORDER_CAP, cache_dir=None, use_cache=True):
    '''
    Returns a copy of `group` with Cayley data, loading it from the cache directory when a valid
    cache file exists and writing one after a fresh enumeration.
    '''
    from spcgt.groups.cache import cache_path, load_cayley, save_cayley

    if group.has_cayley:
        return group
    predicted = group.predicted_order()
    if predicted > order_cap:
        raise ResourceLimitExceeded('Sp_%d(Z/%d) has predicted order %d, above the order cap of %d' % (
            2 * group.g, group.modulus, predicted, order_cap))

    path = None
    if use_cache and cache_dir:
        path = cache_path(cache_dir, group)
        cayley = load_cayley(path, group, predicted if group.standard else None)
        if cayley is not None:
            log.info('Loaded Sp_%d(Z/%d) from cache %s', 2 * group.g, group.modulus, path)
            return group.with_cayley(cayley)
        log.info('No usable cache for Sp_%d(Z/%d) at %s', 2 * group.g, group.modulus, path)

    cayley = breadth_first_search(group.generator_array(), group.modulus, order_cap)
    if group.standard and cayley.order != predicted:
        raise SpcgtInternalError('enumerated %d elements of Sp_%d(Z/%d), but the order formula predicts %d' % (
            cayley.order, 2 * group.g, group.modulus, predicted))
    log.info('Enumerated Sp_%d(Z/%d): %d elements, %d relators', 2 * group.g, group.modulus,
             cayley.order, cayley.relator_count)

    if path:
        save_cayley(path, cayley)
    return group.with_cayley(cayley)
