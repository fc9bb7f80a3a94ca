import random

from hypothesis import strategies as st

from platslide.colored_graph import random_admissible
from platslide.tuple_core import SixTuple

# criterion number -> (title, passed, detail), filled by test_acceptance
ACCEPTANCE = {}


def admissible_codes(hmax=12):
    """Hypothesis strategy of admissible codes with ``h_i <= hmax``."""
    # seed a private generator: rejection sampling would exhaust hypothesis' data buffer
    return st.integers(0, 2**32 - 1).map(lambda seed: random_admissible(random.Random(seed), hmax))

# first hit of the h <= 4 scan that passes the conditions with rho_23 = 5
INADMISSIBLE = SixTuple(1, 1, 3, 0, 0, 0)
