from .core import (
    tensor,
    tensor_all,
    kron_all,
    apply,
    measure,
    l1_distance,
    von_neumann_entropy,
    complete_isometry,
    random_state,
    random_unitary,
)

__all__ = [
    tensor,
    tensor_all,
    kron_all,
    apply,
    measure,
    l1_distance,
    von_neumann_entropy,
    complete_isometry,
    random_state,
    random_unitary
]
