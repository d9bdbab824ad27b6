"""
spcgt/modules/module.py

Linear modules over Z/L for a generated group, plus the level-by-level transport of the action
along the BFS spanning tree that everything downstream of enumeration uses.
"""

from spcgt.groups.enumeration import compact_dtype
from spcgt.linalg import ZMatrix, crt_split, matmul_mod, rank_mod_p
from spcgt.utils import InvalidArgument, require_int
import logging
import numpy as np

log = logging.getLogger(__name__)

# int64 entries materialized per batch while transporting actions:
SWEEP_BATCH_ENTRIES = 2 ** 22


class LinearModule(object):
    '''
    A G-module (Z/L)^dim: one invertible dim x dim action matrix per group generator, in the same
    order as the group's generators.
    '''

    def __init__(self, dim, modulus, action, label=''):
        require_int('dim', dim, 0)
        require_int('modulus', modulus, 2)
        action = tuple(action)
        for i, a in enumerate(action):
            if not isinstance(a, ZMatrix):
                raise InvalidArgument('action %d must be a ZMatrix, found %r' % (i, a))
            if a.shape != (dim, dim) or a.modulus != modulus:
                raise InvalidArgument('action %d must be %dx%d over Z/%d, found %dx%d over Z/%d' % (
                    i, dim, dim, modulus, a.rows, a.cols, a.modulus))
            if dim:
                for p, _ in crt_split(modulus):
                    if rank_mod_p(a.array % p, p) != dim:
                        raise InvalidArgument('action %d is not invertible modulo %d' % (i, p))
        self.dim = dim
        self.modulus = modulus
        self.action = action
        self.label = label

    @property
    def generator_count(self):
        return len(self.action)

    def action_array(self):
        'The actions as an (m, dim, dim) int64 array.'
        return np.array([a.array for a in self.action], dtype=np.int64).reshape(len(self.action), self.dim, self.dim)

    def check_group(self, group):
        if self.generator_count != group.generator_count:
            raise InvalidArgument('module %s has %d action matrices but the group has %d generators' % (
                self.label or '(unnamed)', self.generator_count, group.generator_count))

    def __repr__(self):
        return 'LinearModule(%s, dim=%d, modulus=%d)' % (self.label or '?', self.dim, self.modulus)


def batch_rows(per_row_entries):
    return max(1, SWEEP_BATCH_ENTRIES // max(1, per_row_entries))


def transport(rho, parent_offsets, gens, action, modulus):
    'rho[parent] @ action[gen] for every child, batched per generator.'
    d = action.shape[1]
    out = np.empty((len(gens), d, d), dtype=rho.dtype)
    for j in range(action.shape[0]):
        sel = np.nonzero(gens == j)[0]
        step = batch_rows(d * d)
        for b in range(0, len(sel), step):
            s = sel[b:b + step]
            r = rho[parent_offsets[s]].astype(np.int64).reshape(-1, d)
            out[s] = matmul_mod(r, action[j], modulus).reshape(len(s), d, d).astype(rho.dtype)
    return out


def sweep_levels(group, action, modulus, limit=None):
    '''
    Yields (start, end, rho) for every BFS level, where rho[i] is the action matrix of element
    start + i.  Only two levels are ever held in memory.  With `limit`, the sweep stops at the
    first `limit` elements and the last level may be cut short.
    '''
    cayley = group.require_cayley()
    d = action.shape[1]
    limit = cayley.order if limit is None else min(limit, cayley.order)
    bounds = [(s, min(e, limit)) for s, e in cayley.level_bounds if s < limit]
    rho = np.eye(d, dtype=compact_dtype(modulus))[None]
    for level, (start, end) in enumerate(bounds):
        yield start, end, rho
        if level + 1 == len(bounds):
            break
        s2, e2 = bounds[level + 1]
        offsets = cayley.parent[s2:e2].astype(np.int64) - start
        rho = transport(rho, offsets, cayley.parent_gen[s2:e2], action, modulus)


def action_of(group, module, index):
    'The action matrix of a single enumerated element, multiplied out along its tree word.'
    result = ZMatrix.identity(module.dim, module.modulus)
    for j in group.tree_word(int(index)):
        result = result @ module.action[j]
    return result


def element_actions(group, module):
    '''
    The action matrix of every enumerated element, as an (N, dim, dim) array in BFS order.  Meant
    for small groups: the result holds N * dim^2 entries.
    '''
    module.check_group(group)
    blocks = [rho for _, _, rho in sweep_levels(group, module.action_array(), module.modulus)]
    return np.concatenate(blocks)


def satisfies_relators(group, module, block=4):
    '''
    Whether every relator of the group evaluates to the identity in the module, i.e. whether
    rho(u) * A_j = rho(u * s_j) on every Cayley edge.  Works on a few columns at a time so that
    only N * dim * block entries are ever stored.
    '''
    module.check_group(group)
    cayley = group.require_cayley()
    d, m, modulus = module.dim, module.generator_count, module.modulus
    if not d:
        return True
    action = module.action_array()
    dtype = compact_dtype(modulus)
    for c0 in range(0, d, block):
        cols = np.eye(d, dtype=np.int64)[:, c0:c0 + block]
        c = cols.shape[1]
        moved = np.stack([matmul_mod(action[j], cols, modulus) for j in range(m)])
        z = np.zeros((cayley.order, d, c), dtype=dtype)
        previous = None
        for start, end, rho in sweep_levels(group, action, modulus):
            z[start:end] = matmul_mod(rho.astype(np.int64).reshape(-1, d), cols, modulus).reshape(end - start, d, c)
            if previous is not None and not _edges_consistent(previous, moved, z, cayley, modulus):
                return False
            previous = (start, end, rho)
        if not _edges_consistent(previous, moved, z, cayley, modulus):
            return False
    return True


def _edges_consistent(level, moved, z, cayley, modulus):
    start, end, rho = level
    d, c = z.shape[1], z.shape[2]
    m = moved.shape[0]
    step = batch_rows(m * d * d)
    for b in range(start, end, step):
        e = min(end, b + step)
        r = rho[b - start:e - start].astype(np.int64)
        for j in range(m):
            lhs = matmul_mod(r.reshape(-1, d), moved[j], modulus).reshape(e - b, d, c)
            if np.any(lhs != z[cayley.table[b:e, j]]):
                log.debug('Relator failure at element %d, generator %d', b, j)
                return False
    return True
