from .boolean import BooleanPoly, bcj_product, dim_Bbar, dim_Bn, symbol_of_class
from .forms import QuadraticForm, act, all_forms, arf, evaluate_form, orbit_arf_classification
