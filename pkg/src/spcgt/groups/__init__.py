from .congruence import CongruenceElement, igusa_vector, phi, sample_congruence_element
from .enumeration import CayleyData, GeneratedGroup, enumerate_group, evaluate_relator
from .symplectic import group_order_formula, is_lie_element, is_symplectic, omega, predicted_order, reduce_level, \
    symplectic_generators
