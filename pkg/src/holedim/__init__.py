"""Rigorous Hausdorff-dimension bounds for survivor sets of x -> kx mod 1
with an open hole (a, b): exact symbolic machinery, inner/outer finite-type
approximations, positivity certificates, and the staircase reduction to the
doubling map."""

from .symbolic import (
    KExpansionPrefix,
    Word,
    as_fraction,
    cylinder,
    is_k_adic,
    k_expansion,
    k_transform,
    reflect_word,
    thue_morse_constant,
    thue_morse_digits,
    word_from_digits,
    word_value,
)
from .cantor import (
    CantorPoint,
    PlateauInterval,
    cantor_function,
    cantor_function_inverse,
    in_cantor_set,
    plateau_of,
    thue_morse_preimage,
    to_binary_word,
)
from .sft import (
    BudgetError,
    ConvergenceError,
    DepthApproximation,
    EntropyBounds,
    ForcedRunSubshift,
    Hole,
    Mode,
    Relation,
    SurvivorCounts,
    build_approximation,
    count_sequence,
    entropy_bounds,
    forced_run_subshift,
    full_shift_entropy,
    full_shift_relation,
    has_entropy_certificate,
    spectral_radius,
)
from .dimension import (
    DimensionEstimate,
    Method,
    Positivity,
    PositivityResult,
    RegionClass,
    classify,
    estimate_dimension,
    full_shift_lower_bound,
    is_strictly_central,
    narrow_hole_threshold,
    positivity,
    reduce_to_doubling,
    reflect_hole,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CantorPoint",
    "ConvergenceError",
    "DepthApproximation",
    "DimensionEstimate",
    "EntropyBounds",
    "ForcedRunSubshift",
    "Hole",
    "KExpansionPrefix",
    "Method",
    "Mode",
    "PlateauInterval",
    "Positivity",
    "PositivityResult",
    "RegionClass",
    "Relation",
    "SurvivorCounts",
    "Word",
    "as_fraction",
    "build_approximation",
    "cantor_function",
    "cantor_function_inverse",
    "classify",
    "count_sequence",
    "cylinder",
    "entropy_bounds",
    "estimate_dimension",
    "forced_run_subshift",
    "full_shift_entropy",
    "full_shift_lower_bound",
    "full_shift_relation",
    "has_entropy_certificate",
    "in_cantor_set",
    "is_k_adic",
    "is_strictly_central",
    "k_expansion",
    "k_transform",
    "narrow_hole_threshold",
    "plateau_of",
    "positivity",
    "reduce_to_doubling",
    "reflect_hole",
    "reflect_word",
    "spectral_radius",
    "thue_morse_constant",
    "thue_morse_digits",
    "thue_morse_preimage",
    "to_binary_word",
    "word_from_digits",
    "word_value",
]
