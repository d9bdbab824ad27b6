from .modular import AffineSolution, RowEchelonModP, RowSpaceAccumulator, crt_combine, crt_idempotents, crt_split, \
    inverse_mod_array, is_prime, kernel_mod, rank_mod_p, solution_space_mod, solve_mod, submodule_order, \
    submodule_structure
from .snf import AbelianGroupStructure, LatticeAccumulator, abelian_quotient, smith_normal_form
from .zmatrix import ZMatrix, matmul_mod
