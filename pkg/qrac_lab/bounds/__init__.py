from .information import holevo_chi, scheme_ensemble, bit_informations, decoding_mutual_information
from .reports import (
    quantum_bound_report,
    serial_bound_report,
    bound_sweep,
    chain_values,
    target_epsilon,
)

__all__ = [
    holevo_chi,
    scheme_ensemble,
    bit_informations,
    decoding_mutual_information,
    quantum_bound_report,
    serial_bound_report,
    bound_sweep,
    chain_values,
    target_epsilon
]
