"""
spcgt/modules/standard.py

The concrete modules: the standard module H_L, the adjoint module sp_2g(Z/L), exterior cubes, the
omega-embedding of H into the exterior cube, quotients, duals, and coefficient reduction.
Also module homomorphisms and an isomorphism test over prime fields.
"""

from spcgt.groups.symplectic import symplectic_inverse
from spcgt.linalg import ZMatrix, crt_split, inverse_mod_array, is_prime, kernel_mod, rank_mod_p, \
    smith_normal_form, submodule_order, AbelianGroupStructure
from spcgt.modules.lie import _sp_basis_arrays, lie_array_coordinates, sp_dim
from spcgt.modules.module import LinearModule
from spcgt.utils import InvalidArgument, ResourceLimitExceeded, SpcgtInternalError, require_int
import collections
import itertools
import logging
import numpy as np

log = logging.getLogger(__name__)

ModuleQuotient = collections.namedtuple('ModuleQuotient', ['module', 'structure', 'projection'])


def trivial_module(group, dim, modulus=None):
    'Z/L^dim with every generator acting as the identity.'
    modulus = group.modulus if modulus is None else modulus
    identity = ZMatrix.identity(dim, modulus)
    return LinearModule(dim, modulus, [identity] * group.generator_count, label='trivial^%d' % (dim,))


def standard_module(group):
    'H_L = (Z/L)^2g, each generator acting by its own matrix.'
    return LinearModule(group.dim, group.modulus, group.generators, label='standard')


def adjoint_matrix(x, g):
    'The matrix of A -> X A X^-1 on sp_2g(Z/L) in the fixed basis.'
    modulus = x.modulus
    xa = x.lift().array
    xi = symplectic_inverse(x, g).lift().array
    basis = np.array(_sp_basis_arrays(g), dtype=object)
    conjugated = np.array([(xa @ b @ xi) % modulus for b in basis], dtype=object)
    coords = lie_array_coordinates(conjugated, g)
    return ZMatrix.from_array(coords.T, modulus)


def adjoint_module(group):
    'sp_2g(Z/L) under conjugation.'
    action = [adjoint_matrix(x, group.g) for x in group.generators]
    return LinearModule(sp_dim(group.g), group.modulus, action, label='adjoint')


def wedge3_triples(n):
    'Basis e_i ^ e_j ^ e_k of the exterior cube, i < j < k in lexicographic order.'
    return list(itertools.combinations(range(n), 3))


def _det3(m):
    return (m[:, 0, 0] * (m[:, 1, 1] * m[:, 2, 2] - m[:, 1, 2] * m[:, 2, 1])
            - m[:, 0, 1] * (m[:, 1, 0] * m[:, 2, 2] - m[:, 1, 2] * m[:, 2, 0])
            + m[:, 0, 2] * (m[:, 1, 0] * m[:, 2, 1] - m[:, 1, 1] * m[:, 2, 0]))


def exterior_cube_matrix(x):
    '''
    The induced action of X on the exterior cube: the entry at (abc, ijk) is the 3x3 minor of X on
    rows a, b, c and columns i, j, k.
    '''
    n = x.rows
    triples = wedge3_triples(n)
    if not triples:
        return ZMatrix.zeros(0, 0, x.modulus)
    rows = np.array(triples)
    a = x.lift().array
    result = np.zeros((len(triples), len(triples)), dtype=object)
    for col, (i, j, k) in enumerate(triples):
        cols = a[:, [i, j, k]]
        result[:, col] = _det3(cols[rows])
    return ZMatrix.from_array(result, x.modulus)


def exterior_cube(module):
    if module.dim % 2:
        raise InvalidArgument('exterior_cube expects a module of even dimension 2g, found %d' % (module.dim,))
    action = [exterior_cube_matrix(a) for a in module.action]
    dim = len(wedge3_triples(module.dim))
    return LinearModule(dim, module.modulus, action, label='wedge3(%s)' % (module.label,))


def _sorted_sign(indices):
    'Sorts a list of distinct indices, returning (sorted tuple, sign of the sorting permutation).'
    items = list(indices)
    sign = 1
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if items[j] > items[j + 1]:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    return tuple(items), sign


def omega_embedding(g, modulus):
    '''
    The C(2g,3) x 2g matrix of h -> h ^ omega, omega = a_1^b_1 + ... + a_g^b_g, with a_i = e_i and
    b_i = e_(g+i).  Its columns have disjoint supports and entries +-1.
    '''
    require_int('g', g, 1)
    if g < 2:
        raise InvalidArgument('the omega-embedding needs g >= 2, found g=%d' % (g,))
    triples = wedge3_triples(2 * g)
    position = {t: r for r, t in enumerate(triples)}
    result = np.zeros((len(triples), 2 * g), dtype=np.int64)
    for k in range(2 * g):
        for i in range(g):
            if k in (i, g + i):
                continue
            t, sign = _sorted_sign([k, i, g + i])
            result[position[t], k] += sign
    return ZMatrix.from_array(result, modulus)


def quotient_module(module, generators):
    '''
    The quotient of `module` by the submodule spanned by `generators` (vectors mod L).  The
    abstract structure is always reported; the induced module and the projection onto it only
    when the quotient is free over Z/L.
    '''
    d, modulus = module.dim, module.modulus
    generators = [[int(c) % modulus for c in v] for v in generators]
    if any(len(v) != d for v in generators):
        raise InvalidArgument('submodule generators must have length %d' % (d,))

    base = submodule_order(generators, d, modulus)
    for i, a in enumerate(module.action):
        moved = [list(a.apply(v)) for v in generators]
        if submodule_order(generators + moved, d, modulus) != base:
            raise InvalidArgument('submodule is not stable under generator %d' % (i,))

    if not d:
        return ModuleQuotient(module, AbelianGroupStructure.trivial(), ZMatrix.zeros(0, 0, modulus))
    columns = [[v[r] for v in generators] + [modulus if r == c else 0 for c in range(d)] for r in range(d)]
    dmat, u, _, u_inv, _ = smith_normal_form(ZMatrix(columns), with_inverses=True)
    diagonal = [abs(dmat[i, i]) for i in range(d)]
    structure = AbelianGroupStructure.from_cyclic_orders(diagonal)
    if any(x not in (1, modulus) for x in diagonal):
        log.info('Quotient of %s is not free over Z/%d: %s', module.label, modulus, structure.symbol())
        return ModuleQuotient(None, structure, None)

    free = [i for i, x in enumerate(diagonal) if x == modulus]
    projection = ZMatrix.from_array(u.array[free, :], modulus)
    ua, uia = u.array, u_inv.array
    action = []
    for a in module.action:
        conj = (ua @ a.lift().array @ uia)[np.ix_(free, free)]
        action.append(ZMatrix.from_array(conj, modulus))
    quotient = LinearModule(len(free), modulus, action, label='%s/sub' % (module.label,))
    return ModuleQuotient(quotient, structure, projection)


def wedge3_mod_omega(group):
    '(wedge^3 H_L) / H_L, with H_L embedded through omega.'
    cube = exterior_cube(standard_module(group))
    emb = omega_embedding(group.g, group.modulus)
    result = quotient_module(cube, [list(col) for col in emb.array.T])
    if result.module is None:
        raise SpcgtInternalError('the omega-embedding image should be a direct summand')
    result.module.label = 'wedge3-mod-omega'
    return result


def dual_module(module):
    'The contragredient module: each generator acts by the inverse transpose.'
    action = []
    for a in module.action:
        inv = inverse_mod_array(a.array, module.modulus) if module.dim else a.array
        action.append(ZMatrix.from_array(np.asarray(inv).T, module.modulus))
    label = module.label[5:-1] if module.label.startswith('dual(') else 'dual(%s)' % (module.label,)
    return LinearModule(module.dim, module.modulus, action, label=label)


def reduce_coefficients(module, q):
    'The same action with coefficients in Z/q, for q dividing the module modulus.'
    require_int('q', q, 2)
    if module.modulus % q:
        raise InvalidArgument('cannot reduce coefficients from Z/%d to Z/%d' % (module.modulus, q))
    if q == module.modulus:
        return module
    action = [a.reduce(q) for a in module.action]
    return LinearModule(module.dim, q, action, label='%s mod %d' % (module.label, q))


def module_homomorphisms(source, target):
    '''
    Generators of Hom_G(source, target): all T with T A_s = B_s T for every generator s, returned
    as target.dim x source.dim matrices.
    '''
    if source.modulus != target.modulus or source.generator_count != target.generator_count:
        raise InvalidArgument('modules %s and %s are not over the same group and ring' % (source.label, target.label))
    ds, dt, modulus = source.dim, target.dim, source.modulus
    if not ds or not dt:
        return []
    blocks = []
    for a, b in zip(source.action, target.action):
        left = np.kron(np.eye(dt, dtype=object), a.lift().array.T)
        right = np.kron(b.lift().array, np.eye(ds, dtype=object))
        blocks.append((left - right) % modulus)
    kernel = kernel_mod(np.vstack(blocks), modulus)
    return [ZMatrix.from_array(col.reshape(dt, ds), modulus) for col in kernel.T if np.any(col)]


def are_isomorphic(source, target, search_limit=2 ** 16):
    '''
    Decides whether two modules over a prime field are isomorphic by searching Hom_G for an
    invertible element.  The search is exhaustive, so it refuses Hom spaces with more than
    `search_limit` elements.
    '''
    if source.dim != target.dim:
        return False
    p = source.modulus
    if not is_prime(p):
        raise InvalidArgument('are_isomorphic works over prime fields only, found Z/%d' % (p,))
    homs = module_homomorphisms(source, target)
    if not source.dim:
        return True
    if not homs:
        return False
    basis = np.array([h.array for h in homs], dtype=np.int64)
    if p ** len(homs) > search_limit:
        raise ResourceLimitExceeded('Hom space has %d^%d elements, above the search limit %d' % (
            p, len(homs), search_limit))
    for coeffs in itertools.product(range(p), repeat=len(homs)):
        if not any(coeffs):
            continue
        t = np.tensordot(np.array(coeffs, dtype=np.int64), basis, axes=1) % p
        if rank_mod_p(t, p) == source.dim:
            return True
    return False


def crt_components(module):
    'The module split into its prime-power coefficient parts, as (p, k, module mod p^k).'
    return [(p, k, reduce_coefficients(module, p ** k)) for p, k in crt_split(module.modulus)]


MODULE_SPECS = ('adjoint', 'standard', 'wedge3', 'wedge3-mod-omega', 'trivial')


def check_module_spec(spec):
    'Validates a module name such as "adjoint" or "dual-of-wedge3" and returns it unchanged.'
    base = spec
    while base.startswith('dual-of-'):
        base = base[len('dual-of-'):]
    if base not in MODULE_SPECS:
        raise InvalidArgument('unknown module %r; expected one of %s, optionally prefixed by dual-of-' % (
            spec, ', '.join(MODULE_SPECS)))
    return spec


def build_module(group, spec):
    check_module_spec(spec)
    if spec.startswith('dual-of-'):
        return dual_module(build_module(group, spec[len('dual-of-'):]))
    if spec == 'standard':
        return standard_module(group)
    if spec == 'adjoint':
        return adjoint_module(group)
    if spec == 'wedge3':
        return exterior_cube(standard_module(group))
    if spec == 'wedge3-mod-omega':
        return wedge3_mod_omega(group).module
    return trivial_module(group, 1)
