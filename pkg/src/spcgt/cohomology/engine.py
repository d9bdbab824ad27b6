"""
spcgt/cohomology/engine.py

Twisted first cohomology H^1(G; M) of an enumerated group.

A cocycle is determined by its values F_j = f(s_j) on the generators.  Along the BFS spanning tree
every other value follows from f(u s_j) = f(u) + u.F_j, and the cocycle law holds exactly when the
same identity also holds on every non-tree Cayley edge.  The edges are swept level by level; each
one contributes dim M linear constraints on the unknowns (F_0, ..., F_(m-1)).

Two passes keep the working set small.  The first pass applies the constraints of the first
`jacobian_budget` elements to the full space of unknowns.  The second pass only follows the part
of that candidate space that is not already accounted for by coboundaries, across the whole group.
"""

from spcgt.constants import SPCGT_DEFAULT_JACOBIAN_BUDGET
from spcgt.groups.enumeration import compact_dtype
from spcgt.linalg import AbelianGroupStructure, RowSpaceAccumulator, abelian_quotient, crt_idempotents, \
    kernel_mod, matmul_mod, solve_mod, submodule_order
from spcgt.modules.module import action_of, batch_rows, sweep_levels
from spcgt.modules.standard import dual_module, reduce_coefficients
from spcgt.utils import InvalidArgument, SpcgtInternalError, require_int
import logging
import numpy as np
import time

log = logging.getLogger(__name__)


class CocycleSpace(object):
    '''
    Z^1, B^1 and H^1 = Z^1 / B^1 for one module.  Cocycles are recorded by their restriction to the
    generators, as vectors of length (#generators * dim M) laid out generator by generator.
    dim_Z1 and dim_B1 are composition lengths, which over a prime field are plain dimensions.
    '''

    def __init__(self, module, z1_basis, b1_basis, z1_order, b1_order, dim_Z1, dim_B1, h1):
        self.module = module
        self.z1_basis = z1_basis
        self.b1_basis = b1_basis
        self.z1_order = z1_order
        self.b1_order = b1_order
        self.dim_Z1 = dim_Z1
        self.dim_B1 = dim_B1
        self.h1 = h1

    def to_json(self):
        return {
            'b1_order': self.b1_order,
            'dim_B1': self.dim_B1,
            'dim_Z1': self.dim_Z1,
            'h1': self.h1.to_json(),
            'z1_order': self.z1_order,
        }

    def __repr__(self):
        return 'CocycleSpace(%s, dim_Z1=%d, dim_B1=%d, h1=%s)' % (
            self.module.label, self.dim_Z1, self.dim_B1, self.h1.symbol())


def composition_length(order, p):
    length = 0
    while order > 1:
        if order % p:
            raise SpcgtInternalError('order %d is not a power of %d' % (order, p))
        order //= p
        length += 1
    return length


def coboundary_generators(action, modulus):
    '''
    The principal derivations f(s_j) = s_j.e_i - e_i of the standard basis vectors e_i, as the
    columns of an (m*d) x d array.
    '''
    m, d = action.shape[0], action.shape[1]
    if not d:
        return np.zeros((0, 0), dtype=np.int64)
    identity = np.eye(d, dtype=np.int64)
    return (action.astype(np.int64) - identity[None]).reshape(m * d, d) % modulus


def cohomology_quotient(z1, b1, modulus):
    '''
    span(z1) / span(b1) for column generators with span(b1) inside span(z1): Z^t modulo the
    coefficient vectors y with z1 y in span(b1).
    '''
    t = z1.shape[1]
    if not t:
        return AbelianGroupStructure.trivial()
    if not b1.shape[1]:
        relations = kernel_mod(z1, modulus).T
    else:
        combined = np.hstack([z1, (-b1.astype(object)) % modulus])
        relations = kernel_mod(combined, modulus)[:t].T
    return abelian_quotient(t, [list(r) for r in relations], modulus)


def _columns(a):
    return [list(int(x) for x in col) for col in np.asarray(a).T]


def constraint_sweep(group, action, p, k, basis, limit):
    '''
    Restricts the candidate space spanned by the columns of `basis` (an (m*d) x t array over
    Z/p^k) to the vectors whose tree extension satisfies f(u s_j) = f(u) + u.F_j on every Cayley
    edge among the first `limit` elements.  Returns a generating set of the restricted space as
    columns.

    Over a prime field the candidate space is shrunk after every level, so the values kept per
    element have the width of the current candidate space rather than of all the unknowns.
    '''
    cayley = group.require_cayley()
    q = p ** k
    m, d = action.shape[0], action.shape[1]
    limit = min(limit, cayley.order)
    basis = np.asarray(basis, dtype=np.int64) % q
    t = basis.shape[1]
    dtype = compact_dtype(q)
    values = np.zeros((limit, d, t), dtype=dtype)
    acc = RowSpaceAccumulator(t, p, k)

    for start, end, rho in sweep_levels(group, action, q, limit):
        if not t:
            break
        blocks = basis.reshape(m, d, t)

        # Tree values of the next level, from their parents on this level:
        children = np.arange(end, limit)
        children = children[(cayley.parent[end:limit] >= start) & (cayley.parent[end:limit] < end)]
        for j in range(m):
            sel = children[cayley.parent_gen[children] == j]
            step = batch_rows(d * (d + t))
            for b in range(0, len(sel), step):
                w = sel[b:b + step]
                u = cayley.parent[w].astype(np.int64)
                moved = matmul_mod(rho[u - start].astype(np.int64), blocks[j], q)
                values[w] = ((values[u].astype(np.int64) + moved) % q).astype(dtype)

        # Every edge leaving this level lands on this level or an earlier one, or on the next:
        step = batch_rows(m * d * (d + t))
        for b in range(start, end, step):
            e = min(end, b + step)
            r = rho[b - start:e - start].astype(np.int64)
            base = values[b:e].astype(np.int64)
            for j in range(m):
                w = cayley.table[b:e, j].astype(np.int64)
                keep = w < limit
                if not np.any(keep):
                    continue
                moved = matmul_mod(r[keep], blocks[j], q)
                rows = (base[keep] + moved - values[w[keep]].astype(np.int64)) % q
                acc.add(rows.reshape(-1, t))

        if acc.field is not None and acc.field.rank:
            y = acc.kernel()
            basis = matmul_mod(basis, y, q)
            values = matmul_mod(values.astype(np.int64), y, q).astype(dtype)
            t = basis.shape[1]
            acc = RowSpaceAccumulator(t, p, k)
            log.debug('Level ending at %d: candidate space down to %d dimensions', end, t)

    if not t:
        return np.zeros((m * d, 0), dtype=np.int64)
    if acc.field is not None:
        return basis
    return matmul_mod(basis, np.asarray(acc.kernel(), dtype=np.int64), q)


def complement_in_span(candidates, fixed, modulus):
    '''
    Columns of `candidates` that, added greedily, together with `fixed` span everything the
    candidates span.
    '''
    chosen = []
    current = np.asarray(fixed, dtype=np.int64).reshape(candidates.shape[0], -1)
    for col in np.asarray(candidates).T:
        if current.shape[1]:
            x, _ = solve_mod(current, col, modulus)
            if x is not None:
                continue
        elif not np.any(col % modulus):
            continue
        chosen.append(col)
        current = np.hstack([current, col.reshape(-1, 1)])
    if not chosen:
        return np.zeros((candidates.shape[0], 0), dtype=np.int64)
    return np.array(chosen, dtype=np.int64).T


def _prime_power_cocycles(group, module, p, k, jacobian_budget):
    q = p ** k
    cayley = group.require_cayley()
    action = module.action_array() % q
    m, d = action.shape[0], action.shape[1]
    b1 = coboundary_generators(action, q)
    if not d:
        empty = np.zeros((0, 0), dtype=np.int64)
        return empty, empty

    limit = min(jacobian_budget, cayley.order)
    started = time.time()
    candidates = constraint_sweep(group, action, p, k, np.eye(m * d, dtype=np.int64), limit)
    log.info('First pass over %d elements: %d candidate cocycle generators (%.1fs)',
             limit, candidates.shape[1], time.time() - started)

    if limit == cayley.order or not candidates.shape[1]:
        return candidates, b1

    complement = complement_in_span(candidates, b1, q)
    log.info('Following %d candidate directions beyond the coboundaries across all %d elements',
             complement.shape[1], cayley.order)
    if not complement.shape[1]:
        return b1.copy(), b1
    started = time.time()
    survivors = constraint_sweep(group, action, p, k, complement, cayley.order)
    log.info('Second pass: %d surviving directions (%.1fs)', survivors.shape[1], time.time() - started)
    return np.hstack([b1, survivors]), b1


def h1_cohomology(group, module, jacobian_budget=SPCGT_DEFAULT_JACOBIAN_BUDGET):
    '''
    Z^1, B^1 and H^1(G; M) for an enumerated group.  Composite moduli are split into prime power
    parts; each part is solved separately and the answers are recombined with CRT idempotents.
    '''
    group.require_cayley()
    module.check_group(group)
    require_int('jacobian_budget', jacobian_budget, 1)
    modulus = module.modulus
    m, d = module.generator_count, module.dim
    z1_all = np.zeros((m * d, 0), dtype=object)
    b1_all = np.zeros((m * d, 0), dtype=object)
    parts = []
    z1_order = b1_order = 1
    dim_z1 = dim_b1 = 0
    for p, k, q, e in crt_idempotents(modulus):
        part = reduce_coefficients(module, q)
        z1, b1 = _prime_power_cocycles(group, part, p, k, jacobian_budget)
        zo = submodule_order(_columns(z1), m * d, q)
        bo = submodule_order(_columns(b1), m * d, q)
        if not m * d:
            zo = bo = 1
        h1 = cohomology_quotient(z1, b1, q)
        if zo != bo * h1.order:
            raise SpcgtInternalError('|Z^1| = %d but |B^1| * |H^1| = %d over Z/%d' % (zo, bo * h1.order, q))
        parts.append(h1)
        z1_order *= zo
        b1_order *= bo
        dim_z1 += composition_length(zo, p)
        dim_b1 += composition_length(bo, p)
        z1_all = np.hstack([z1_all, (e * z1.astype(object)) % modulus])
        b1_all = np.hstack([b1_all, (e * b1.astype(object)) % modulus])

    h1 = AbelianGroupStructure.trivial().direct_sum(*parts)
    space = CocycleSpace(module, [tuple(c) for c in _columns(z1_all)], [tuple(c) for c in _columns(b1_all)],
                         z1_order, b1_order, dim_z1, dim_b1, h1)
    log.info('H^1 of %r with coefficients in %s: %s', group, module.label, h1.symbol())
    return space


def h1_homology(group, module, jacobian_budget=SPCGT_DEFAULT_JACOBIAN_BUDGET):
    '''
    H_1(G; M), through H^1(G; M*) = Hom(H_1(G; M), Q/Z).  Both groups are finite, so the answer has
    the same invariant factors as H^1 of the dual module.
    '''
    return h1_cohomology(group, dual_module(module), jacobian_budget).h1.dual()


def extend_cocycle(group, module, values):
    '''
    Extends generator values (F_0, ..., F_(m-1)) along the spanning tree to the function f on every
    enumerated element.  Returns an (N, dim) array in BFS order.
    '''
    cayley = group.require_cayley()
    module.check_group(group)
    m, d, q = module.generator_count, module.dim, module.modulus
    values = np.array([int(x) % q for x in values], dtype=np.int64)
    if values.shape != (m * d,):
        raise InvalidArgument('a cocycle restricted to %d generators has %d entries, found %d' % (m, m * d, len(values)))
    blocks = values.reshape(m, d, 1)
    result = np.zeros((cayley.order, d), dtype=np.int64)
    for start, end, rho in sweep_levels(group, module.action_array() % q, q):
        if end == cayley.order:
            break
        children = np.arange(end, cayley.order)
        children = children[(cayley.parent[end:] >= start) & (cayley.parent[end:] < end)]
        for j in range(m):
            w = children[cayley.parent_gen[children] == j]
            u = cayley.parent[w].astype(np.int64)
            moved = matmul_mod(rho[u - start].astype(np.int64), blocks[j], q).reshape(-1, d)
            result[w] = (result[u] + moved) % q
    return result


def check_cocycle_law(group, module, f, samples, seed):
    '''
    Spot-checks f(uv) = u.f(v) + f(u) on `samples` seeded random pairs.  Returns the number of
    failing pairs.
    '''
    cayley = group.require_cayley()
    q = module.modulus
    rng = np.random.default_rng(seed)
    a = rng.integers(0, cayley.order, size=samples)
    b = rng.integers(0, cayley.order, size=samples)
    ab = group.multiply(a, b)
    failures = 0
    for x, y, xy in zip(a, b, ab):
        lhs = f[xy] % q
        rhs = (np.array(action_of(group, module, x).apply(f[y]), dtype=np.int64) + f[x]) % q
        if np.any(lhs != rhs):
            failures += 1
    if failures:
        log.warning('%d of %d sampled pairs violate the cocycle law', failures, samples)
    return failures


def verify_cocycle_space(group, module, space, samples, seed):
    'Extends every Z^1 generator of `space` and spot-checks it; returns the total failure count.'
    failures = 0
    for i, z in enumerate(space.z1_basis):
        failures += check_cocycle_law(group, module, extend_cocycle(group, module, z), samples, seed + i)
    return failures
