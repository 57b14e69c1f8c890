"""Degree-based entropy of bipartite graphs and its extremal graphs."""

from .constructions import (
    BnmyShape, HookShapes, b_nmy, balanced_bipartite_max, complete_bipartite,
    hook_shapes, nearly_regular, prop31_estimate, prop31_maximizer,
    prop32_estimate, prop32_maximizer,
)
from .core import delta, delta_ell, entropy, f, h_of_degrees
from .indices import IndexFunction, builtin_indices, maximize_ti_over_size, ti_g
from .majorization import Comparison, is_bigraphical, karamata_compare, majorizes
from .numtheory import divisor_count, is_smooth, largest_prime_factor, min_r_factorable
from .search import (
    ExtremalRecord, brute_force_extremal, enumerate_tableaux, fast_extremal,
    summarize, sweep, verify_lemma_42, verify_theorem_43,
)
from .tableau import (
    BipartiteDegreePair, YoungTableau, conjugate, h_tableau, is_difference_graph, is_young,
)

__version__ = "0.1.0"
