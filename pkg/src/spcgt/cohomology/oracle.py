"""
spcgt/cohomology/oracle.py

A second, deliberately plain H^1 computation used to cross-check the engine on small groups.

It shares nothing with the engine's presentation: it draws its own random generating set S from
the enumerated elements, grows its own spanning tree over S, and writes every value f(x) as a
linear function of the unknowns f(s), s in S.  The cocycle law f(xy) = x.f(y) + f(x) is then
imposed on every pair (x, t) with t in a second, independent random generating set T, which is
enough for the law to hold on all of G x G, and on a batch of uniformly random pairs (x, y).
"""

from spcgt.cohomology.engine import cohomology_quotient
from spcgt.constants import SPCGT_DEFAULT_ORACLE_CAP, SPCGT_DEFAULT_SAMPLES, SPCGT_DEFAULT_SEED
from spcgt.linalg import AbelianGroupStructure, RowSpaceAccumulator, crt_idempotents, matmul_mod
from spcgt.modules.module import element_actions
from spcgt.modules.standard import reduce_coefficients
from spcgt.utils import ResourceLimitExceeded
import logging
import numpy as np

log = logging.getLogger(__name__)

ORACLE_BATCH = 256


class RandomTree(object):
    '''
    A spanning tree of the Cayley graph of G over a generating set of random elements: parent[x] *
    gens[parent_gen[x]] = x, with element indices taken from the group's own enumeration.  `order`
    lists the elements so that every parent comes before its children.
    '''

    def __init__(self, gens, parent, parent_gen, order):
        self.gens = gens
        self.parent = parent
        self.parent_gen = parent_gen
        self.order = order


def _closure_tree(group, gens):
    n = group.order
    parent = np.full(n, -1, dtype=np.int64)
    parent_gen = np.full(n, -1, dtype=np.int64)
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    order = [np.array([0], dtype=np.int64)]
    frontier = order[0]
    while len(frontier):
        found = []
        for j, s in enumerate(gens):
            products = group.multiply(frontier, np.full(len(frontier), s, dtype=np.int64))
            products, first = np.unique(products, return_index=True)
            fresh = ~seen[products]
            products, sources = products[fresh], frontier[first[fresh]]
            seen[products] = True
            parent[products] = sources
            parent_gen[products] = j
            found.append(products)
        frontier = np.concatenate(found) if found else np.zeros(0, dtype=np.int64)
        order.append(frontier)
    return RandomTree(list(gens), parent, parent_gen, np.concatenate(order)), seen


def random_generating_set(group, rng, size=2):
    '''
    `size` random non-identity elements, extended by random elements outside the subgroup generated
    so far until the whole group is reached.  Returns the spanning tree found along the way.
    '''
    n = group.order
    gens = [int(x) for x in rng.integers(1, n, size=size)]
    while True:
        tree, seen = _closure_tree(group, gens)
        if seen.all():
            log.debug('Random generating set of %d elements for %r', len(gens), group)
            return tree
        outside = np.flatnonzero(~seen)
        gens.append(int(outside[rng.integers(0, len(outside))]))


def value_coefficients(tree, rho, q):
    '''
    C with f(x) = C[x] @ F for every cocycle f, where F stacks f(s) over the tree's generators:
    C[identity] = 0, and C[x s_j] = C[x] + rho[x] @ (the unit block of s_j).
    '''
    n, d = rho.shape[0], rho.shape[1]
    k = len(tree.gens) * d
    coeff = np.zeros((n, d, k), dtype=np.int64)
    for x in tree.order[1:]:
        u, j = tree.parent[x], tree.parent_gen[x]
        coeff[x] = coeff[u]
        coeff[x, :, j * d:(j + 1) * d] = (coeff[x, :, j * d:(j + 1) * d] + rho[u]) % q
    return coeff


def law_rows(coeff, rho, group, x, y, q):
    'The rows of f(xy) - x.f(y) - f(x) = 0 for the index arrays x and y.'
    xy = group.multiply(x, y)
    moved = matmul_mod(rho[x], coeff[y], q)
    rows = (coeff[xy] - moved - coeff[x]) % q
    return rows.reshape(-1, coeff.shape[2])


def _prime_power_oracle(group, module, p, k, rng, samples):
    q = p ** k
    n, d = group.order, module.dim
    rho = element_actions(group, module).astype(np.int64) % q
    tree = random_generating_set(group, rng)
    checks = random_generating_set(group, rng)
    coeff = value_coefficients(tree, rho, q)
    acc = RowSpaceAccumulator(coeff.shape[2], p, k)

    everything = np.arange(n, dtype=np.int64)
    for t in checks.gens:
        for start in range(0, n, ORACLE_BATCH):
            x = everything[start:start + ORACLE_BATCH]
            acc.add(law_rows(coeff, rho, group, x, np.full(len(x), t, dtype=np.int64), q))
    x = rng.integers(0, n, size=samples)
    y = rng.integers(0, n, size=samples)
    for start in range(0, samples, ORACLE_BATCH):
        acc.add(law_rows(coeff, rho, group, x[start:start + ORACLE_BATCH], y[start:start + ORACLE_BATCH], q))
    z1 = np.asarray(acc.kernel(), dtype=np.int64)

    # Column i: the principal derivation x -> x.e_i - e_i, read off at the tree's generators.
    identity = np.eye(d, dtype=np.int64)
    b1 = np.vstack([rho[s] - identity for s in tree.gens]) % q
    return cohomology_quotient(z1, b1, q)


def h1_bar_oracle(group, module, oracle_cap=SPCGT_DEFAULT_ORACLE_CAP, seed=SPCGT_DEFAULT_SEED,
                  samples=SPCGT_DEFAULT_SAMPLES):
    cayley = group.require_cayley()
    module.check_group(group)
    if cayley.order > oracle_cap:
        raise ResourceLimitExceeded('the bar-complex oracle is limited to %d elements; this group has %d' % (
            oracle_cap, cayley.order))
    if not module.dim:
        return AbelianGroupStructure.trivial()
    rng = np.random.default_rng(seed)
    parts = []
    for p, k, q, _ in crt_idempotents(module.modulus):
        parts.append(_prime_power_oracle(group, reduce_coefficients(module, q), p, k, rng, samples))
    result = AbelianGroupStructure.trivial().direct_sum(*parts)
    log.info('Oracle H^1 of %r with coefficients in %s: %s', group, module.label, result.symbol())
    return result
