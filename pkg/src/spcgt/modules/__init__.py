from .lie import sp_dim, sp_lie_basis, trace_form_gram
from .module import LinearModule, element_actions, satisfies_relators
from .standard import MODULE_SPECS, ModuleQuotient, adjoint_module, are_isomorphic, build_module, check_module_spec, \
    dual_module, exterior_cube, module_homomorphisms, omega_embedding, quotient_module, reduce_coefficients, \
    standard_module, trivial_module, wedge3_mod_omega
