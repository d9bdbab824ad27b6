from .engine import CocycleSpace, check_cocycle_law, extend_cocycle, h1_cohomology, h1_homology
from .fixed import coinvariants, coinvariants_from_elements, integral_coinvariants_wedge3, invariants, \
    invariants_structure
from .oracle import h1_bar_oracle
