"""
spcgt/cohomology/fixed.py

Invariants M^G and coinvariants M_G, plus the integral coinvariants of the exterior cube under the
congruence subgroup Sp_2g(Z, L).
"""

from spcgt.groups.congruence import congruence_transvection, sample_congruence_element
from spcgt.linalg import abelian_quotient, kernel_mod, LatticeAccumulator, submodule_structure
from spcgt.modules.module import action_of
from spcgt.modules.standard import exterior_cube_matrix, omega_embedding, wedge3_triples
from spcgt.utils import require_int
import logging
import numpy as np

log = logging.getLogger(__name__)


def invariants(group, module):
    '''
    Generators of M^G: the common kernel of (A_s - I) over the generators s, as a list of vectors.
    '''
    module.check_group(group)
    d = module.dim
    if not d:
        return []
    identity = np.eye(d, dtype=np.int64)
    stacked = np.vstack([(a.array.astype(np.int64) - identity) % module.modulus for a in module.action])
    kernel = kernel_mod(stacked, module.modulus)
    return [tuple(int(x) for x in col) for col in kernel.T if np.any(col)]


def invariants_structure(group, module):
    return submodule_structure(invariants(group, module), module.dim, module.modulus)


def _coinvariant_relations(matrices, d, modulus):
    relations = []
    for a in matrices:
        diff = (np.asarray(a, dtype=object) - np.eye(d, dtype=object)) % modulus
        relations += [list(col) for col in diff.T]
    return relations


def coinvariants(group, module):
    'M_G = M / span{(A_s - I) e}, over generators s and basis vectors e.'
    module.check_group(group)
    d = module.dim
    relations = _coinvariant_relations([a.array for a in module.action], d, module.modulus)
    return abelian_quotient(d, relations, module.modulus)


def coinvariants_from_elements(group, module, count, seed):
    '''
    The same quotient, but with (g - 1) taken over `count` seeded random elements of the enumerated
    group instead of the generators.
    '''
    cayley = group.require_cayley()
    module.check_group(group)
    rng = np.random.default_rng(seed)
    picks = rng.integers(0, cayley.order, size=count)
    matrices = [action_of(group, module, i).array for i in picks]
    return abelian_quotient(module.dim, _coinvariant_relations(matrices, module.dim, module.modulus), module.modulus)


def wedge3_witnesses(g, level, witness_count, seed):
    '''
    Integral elements of Sp_2g(Z, L): the L-th powers of the transvections along every standard
    basis vector, then `witness_count` seeded random products.  The transvection powers alone
    already put L times every basis triple into the relations.
    '''
    witnesses = []
    for k in range(2 * g):
        v = [1 if i == k else 0 for i in range(2 * g)]
        witnesses.append(congruence_transvection(v, g, level))
    for i in range(witness_count):
        witnesses.append(sample_congruence_element(g, level, seed + i))
    return witnesses


def integral_coinvariants_wedge3(g, level, witness_count, seed, closed=False):
    '''
    (wedge^3 H)_{Sp_2g(Z, L)} over the integers, from the relations (M - I) x for the witnesses.
    With `closed`, H is first divided out through the omega-embedding, giving the coinvariants of
    (wedge^3 H) / H instead.
    '''
    require_int('g', g, 1)
    require_int('L', level, 2)
    require_int('witness_count', witness_count, 0)
    if g < 3:
        log.warning('Integral coinvariants of wedge^3 H are only claimed for g >= 3; computing g=%d anyway', g)
    n = len(wedge3_triples(2 * g))
    if not n:
        return abelian_quotient(0, [])

    acc = LatticeAccumulator(n)
    if closed:
        for col in omega_embedding(g, 0).array.T:
            acc.add(list(col))
    for m in wedge3_witnesses(g, level, witness_count, seed):
        cube = exterior_cube_matrix(m.matrix).array
        diff = cube - np.eye(n, dtype=object)
        for col in diff.T:
            if any(col):
                acc.add(list(col))
    result = acc.structure()
    log.info('Integral coinvariants of wedge^3 H%s for g=%d, L=%d: %s', ' / H' if closed else '', g, level,
             result.symbol())
    return result
