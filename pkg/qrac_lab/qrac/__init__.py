from .constructions import qrac_2to1, qrac_3to1, computational_scheme, bloch_state
from .combinators import (
    tensor_power,
    amplify,
    required_copies,
    binomial_majority_success,
)
from .evaluation import success_probability, monte_carlo_success
from .extraction import (
    extraction_order,
    sequential_extract,
    step_perturbation,
    hybrid_distance,
    extraction_report,
    error_growth_sweep,
)

__all__ = [
    qrac_2to1,
    qrac_3to1,
    computational_scheme,
    bloch_state,
    tensor_power,
    amplify,
    required_copies,
    binomial_majority_success,
    success_probability,
    monte_carlo_success,
    extraction_order,
    sequential_extract,
    step_perturbation,
    hybrid_distance,
    extraction_report,
    error_growth_sweep
]
