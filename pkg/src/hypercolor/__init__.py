"""Minimum monochromatic-edge colorings of complete multipartite uniform hypergraphs."""

from hypercolor.combinatorics import binomial, compositions
from hypercolor.constructors import (
    ConstructionResult,
    construct,
    construct_balanced_2color,
    construct_balanced_3color,
    construct_degenerate,
    construct_tripartite_2color,
    x_prime,
)
from hypercolor.counting import (
    Move,
    apply_move,
    delta,
    delta_recolor,
    delta_swap,
    delta_total_swap,
    mono_count,
    s_term,
)
from hypercolor.errors import (
    BudgetExceededError,
    DimensionError,
    HypercolorError,
    IllegalMoveError,
    InfeasibleTotalsError,
    RowSumError,
    UnsupportedRegimeError,
    ValidationError,
)
from hypercolor.model import ColorCounts, HypergraphSpec, canonicalize, validate
from hypercolor.search import (
    FormLabel,
    MinimizerSet,
    brute_force_min,
    classify_form_threecolor,
    classify_form_tripartite2,
    local_search,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ColorCounts",
    "ConstructionResult",
    "DimensionError",
    "FormLabel",
    "HypercolorError",
    "HypergraphSpec",
    "IllegalMoveError",
    "InfeasibleTotalsError",
    "MinimizerSet",
    "Move",
    "RowSumError",
    "UnsupportedRegimeError",
    "ValidationError",
    "apply_move",
    "binomial",
    "brute_force_min",
    "canonicalize",
    "classify_form_threecolor",
    "classify_form_tripartite2",
    "compositions",
    "construct",
    "construct_balanced_2color",
    "construct_balanced_3color",
    "construct_degenerate",
    "construct_tripartite_2color",
    "delta",
    "delta_recolor",
    "delta_swap",
    "delta_total_swap",
    "local_search",
    "mono_count",
    "s_term",
    "validate",
    "x_prime",
]
