from .entropy import binary_entropy, classical_lower_bound
from .covering import (
    hamming_distance,
    greedy_covering_code,
    closest_codeword,
    covering_radius_for,
    existential_code_size_bound,
)
from .pads import (
    pad_encode,
    pad_decode,
    identity_pad,
    build_pad_family,
    pad_scheme,
    identity_scheme,
    length_comparison,
)
from .evaluation import exact_success, success_matrix
from .two_into_one import (
    best_two_into_one,
    pure_strategy_values,
    best_response_value,
    strategy_value,
    quarter_miss,
)

__all__ = [
    binary_entropy,
    classical_lower_bound,
    hamming_distance,
    greedy_covering_code,
    closest_codeword,
    covering_radius_for,
    existential_code_size_bound,
    pad_encode,
    pad_decode,
    identity_pad,
    build_pad_family,
    pad_scheme,
    identity_scheme,
    length_comparison,
    exact_success,
    success_matrix,
    best_two_into_one,
    pure_strategy_values,
    best_response_value,
    strategy_value,
    quarter_miss
]
