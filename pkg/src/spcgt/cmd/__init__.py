from .abelianize import abelianize
from .h1 import compute_h1
from .picard import picard
from .verify import run_verification
